use clap::{Arg, ArgMatches};
use pfaff_core::models::radial_deformation;
use serde_json::{json, Value};

use super::common;
use crate::error::CliError;
use crate::registry::{Command, Context};
use crate::report::{Report, Verdict};
use crate::syntax::{print_constant, print_form};

pub struct Deform;

impl Command for Deform {
    fn name(&self) -> &'static str {
        "deform"
    }

    fn about(&self) -> &'static str {
        "Radial deformation Ω^t = t^-1 Ω(tz) from the linear part (t = 0) to Ω (t = 1)"
    }

    fn args(&self) -> Vec<Arg> {
        vec![
            common::n_arg(),
            common::form_arg(),
            Arg::new("t")
                .long("t")
                .required(true)
                .help("Parameter value, any constant such as 1/2 or i"),
        ]
    }

    fn run(&self, m: &ArgMatches, _: &Context) -> Result<Report, CliError> {
        let n = common::n(m);
        let w = common::one_form(m, "form", n)?;
        let t = common::constant(m, "t")?;
        let fam = radial_deformation(&w)?;
        let components: Vec<Value> = fam
            .components()
            .iter()
            .map(|(deg, part)| json!({ "degree": deg, "form": print_form(part) }))
            .collect();
        Ok(Report::new(self.name(), Verdict::Ok)
            .input("n", n)
            .input("form", print_form(&w))
            .input("t", print_constant(&t))
            .witness(json!({
                "linear_part": print_form(&fam.linear_part()),
                "components": components,
                "at_t": print_form(&fam.evaluate_at(&t)),
                "symbolic": print_form(&fam.symbolic()),
                "t_variable": format!("z{}", n + 1),
            })))
    }
}
