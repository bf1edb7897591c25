use std::env;

use serde::{Deserialize, Serialize};

use super::Coloring;
use crate::graph::{bit, Graph};
use crate::{Error, Result};

/// Vertex-count limits for exhaustive enumeration. Exceeding one is an
/// error, never a silent approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Enumeration of optimal (or optimal r-bounded) colourings.
    pub optimal: usize,
    /// Enumeration of all proper colourings.
    pub full: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            optimal: 10,
            full: 8,
        }
    }
}

impl Guards {
    pub const OPTIMAL_ENV: &'static str = "STINGY_OPTIMAL_GUARD";
    pub const FULL_ENV: &'static str = "STINGY_FULL_GUARD";

    /// Defaults, overridden by `STINGY_OPTIMAL_GUARD` / `STINGY_FULL_GUARD`.
    pub fn from_env() -> Result<Self> {
        let mut guards = Self::default();
        for (key, slot) in [
            (Self::OPTIMAL_ENV, &mut guards.optimal),
            (Self::FULL_ENV, &mut guards.full),
        ] {
            if let Ok(value) = env::var(key) {
                *slot = value.trim().parse().map_err(|_| {
                    Error::InvalidParam(format!("{key}={value} is not a vertex count"))
                })?;
            }
        }
        Ok(guards)
    }

    pub(crate) fn check_optimal(&self, g: &Graph, what: &'static str) -> Result<()> {
        if g.n() > self.optimal {
            Err(Error::GuardExceeded {
                what,
                n: g.n(),
                limit: self.optimal,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_full(&self, g: &Graph, what: &'static str) -> Result<()> {
        if g.n() > self.full {
            Err(Error::GuardExceeded {
                what,
                n: g.n(),
                limit: self.full,
            })
        } else {
            Ok(())
        }
    }
}

/// Visits every proper colouring of `g` with at most `max_classes`
/// classes, each of size at most `cap`, exactly once. Vertices are placed
/// in order `0..n` (restricted growth), so the visiting order is
/// deterministic. The callback sees the classes in creation order and
/// returns `false` to stop.
pub fn for_each_partition(
    g: &Graph,
    max_classes: usize,
    cap: usize,
    f: &mut dyn FnMut(&[u64]) -> bool,
) {
    fn rec(
        g: &Graph,
        v: usize,
        classes: &mut Vec<u64>,
        max_classes: usize,
        cap: usize,
        f: &mut dyn FnMut(&[u64]) -> bool,
    ) -> bool {
        if v == g.n() {
            return f(classes);
        }
        let nb = g.neighbors(v);
        for i in 0..classes.len() {
            let c = classes[i];
            if c & nb == 0 && (c.count_ones() as usize) < cap {
                classes[i] |= bit(v);
                let go = rec(g, v + 1, classes, max_classes, cap, f);
                classes[i] = c;
                if !go {
                    return false;
                }
            }
        }
        if classes.len() < max_classes {
            classes.push(bit(v));
            let go = rec(g, v + 1, classes, max_classes, cap, f);
            classes.pop();
            if !go {
                return false;
            }
        }
        true
    }
    if cap == 0 && g.n() > 0 {
        return;
    }
    let mut classes = Vec::with_capacity(g.n());
    rec(g, 0, &mut classes, max_classes, cap, f);
}

/// Every proper colouring of `g`, canonicalised, in enumeration order.
pub fn proper_colorings(g: &Graph, guards: &Guards) -> Result<Vec<Coloring>> {
    guards.check_full(g, "enumeration of all proper colourings")?;
    let mut out = Vec::new();
    for_each_partition(g, g.n(), g.n().max(1), &mut |cls| {
        out.push(Coloring::from_classes_unchecked(g.n(), cls.to_vec()));
        true
    });
    Ok(out)
}
