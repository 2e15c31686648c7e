use std::collections::BTreeMap;

use clap::{Arg, ArgMatches};

use crate::error::CliError;
use crate::report::Report;

/// Per-invocation settings that do not come from flags.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    /// Seed used when `--seed` is absent.
    pub default_seed: u64,
}

pub trait Command: Send + Sync {
    /// Space-separated path such as `check integrable`.
    fn name(&self) -> &'static str;
    fn about(&self) -> &'static str;
    fn args(&self) -> Vec<Arg>;
    fn run(&self, args: &ArgMatches, ctx: &Context) -> Result<Report, CliError>;
}

#[derive(Default)]
pub struct Registry {
    commands: BTreeMap<&'static str, Box<dyn Command>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every built-in command.
    pub fn standard() -> Self {
        let mut r = Self::new();
        crate::commands::register_all(&mut r);
        r
    }

    pub fn register(&mut self, cmd: Box<dyn Command>) {
        let name = cmd.name();
        if self.commands.insert(name, cmd).is_some() {
            panic!("command `{name}` registered twice");
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Command> {
        self.commands.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.commands.keys().copied()
    }

    /// The clap tree: multi-word names become nested subcommands.
    pub fn cli(&self) -> clap::Command {
        let mut root = clap::Command::new("pfaff")
            .version(env!("CARGO_PKG_VERSION"))
            .about("Exact checks for polynomial one-forms on complex space")
            .subcommand_required(true)
            .arg_required_else_help(true);
        for cmd in self.commands.values() {
            let words: Vec<&str> = cmd.name().split(' ').collect();
            let leaf = clap::Command::new(*words.last().unwrap())
                .about(cmd.about())
                .args(cmd.args());
            root = insert(root, &words[..words.len() - 1], leaf);
        }
        root
    }

    /// Walks the matched subcommand chain to a registered command.
    pub fn resolve<'m>(&self, matches: &'m ArgMatches) -> Option<(&dyn Command, &'m ArgMatches)> {
        let mut name = String::new();
        let mut m = matches;
        while let Some((sub, inner)) = m.subcommand() {
            if !name.is_empty() {
                name.push(' ');
            }
            name.push_str(sub);
            m = inner;
        }
        self.get(&name).map(|c| (c, m))
    }
}

fn group_about(name: &str) -> &'static str {
    match name {
        "check" => "Decide a property of a given form",
        "gen" => "Generate model forms",
        _ => "",
    }
}

fn insert(parent: clap::Command, path: &[&'static str], leaf: clap::Command) -> clap::Command {
    let Some((head, rest)) = path.split_first() else {
        return parent.subcommand(leaf);
    };
    let mut parent = parent;
    let group = match parent.find_subcommand_mut(head) {
        Some(existing) => std::mem::replace(existing, clap::Command::new(*head)),
        None => clap::Command::new(*head)
            .about(group_about(head))
            .subcommand_required(true),
    };
    let group = insert(group, rest, leaf);
    match parent.find_subcommand_mut(head) {
        Some(slot) => {
            *slot = group;
            parent
        }
        None => parent.subcommand(group),
    }
}
