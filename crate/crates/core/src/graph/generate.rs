use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::{Error, Result};

/// Built-in graph families.
///
/// `ErRandom` draws each pair `i < j` independently with probability `p`,
/// in graph6 order (`j` outer, `i` inner), from a ChaCha8 stream seeded
/// with `seed`, so the same triple always produces the same graph.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Petersen,
    Empty(usize),
    ErRandom { n: usize, p: f64, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Complete(n) => Graph::empty(n).map(|g| g.complement()),
        Family::Empty(n) => Graph::empty(n),
        Family::Path(n) => {
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParam(format!("cycle needs n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::from_edges(10, &edges)
        }
        Family::ErRandom { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParam(format!(
                    "edge probability {p} outside [0, 1]"
                )));
            }
            let mut g = Graph::empty(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        g.add_edge(i, j)?;
                    }
                }
            }
            Ok(g)
        }
    }
}

fn parse_size(s: &str) -> Result<usize> {
    s.trim()
        .parse::<i64>()
        .map_err(|_| Error::InvalidParam(format!("bad size `{s}`")))
        .and_then(|v| {
            usize::try_from(v).map_err(|_| Error::InvalidParam(format!("negative size {v}")))
        })
}

/// Parses `complete:4`, `cycle:5`, `path:3`, `petersen`, `empty:5` and
/// `er:<n>:<p>:<seed>`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let arity = |k: usize| {
            if parts.len() == k + 1 {
                Ok(())
            } else {
                Err(Error::InvalidParam(format!(
                    "`{}` expects {k} parameter(s)",
                    parts[0]
                )))
            }
        };
        match parts[0] {
            "complete" => arity(1).and_then(|_| Ok(Family::Complete(parse_size(parts[1])?))),
            "cycle" => arity(1).and_then(|_| Ok(Family::Cycle(parse_size(parts[1])?))),
            "path" => arity(1).and_then(|_| Ok(Family::Path(parse_size(parts[1])?))),
            "empty" => arity(1).and_then(|_| Ok(Family::Empty(parse_size(parts[1])?))),
            "petersen" => arity(0).map(|_| Family::Petersen),
            "er" | "er_random" => {
                arity(3)?;
                let n = parse_size(parts[1])?;
                let p = parts[2]
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidParam(format!("bad probability `{}`", parts[2])))?;
                let seed = parts[3]
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidParam(format!("bad seed `{}`", parts[3])))?;
                Ok(Family::ErRandom { n, p, seed })
            }
            other => Err(Error::InvalidParam(format!(
                "unknown family `{other}` (complete, cycle, path, petersen, empty, er)"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Petersen => f.write_str("petersen"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::ErRandom { n, p, seed } => write!(f, "er:{n}:{p}:{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.is_clique(k4.vertex_mask()));
        let c5 = generate(&Family::Cycle(5)).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let p = generate(&Family::Petersen).unwrap();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(generate(&Family::Path(0)).unwrap().n(), 0);
    }

    #[test]
    fn er_is_deterministic() {
        let fam: Family = "er:8:0.5:42".parse().unwrap();
        assert_eq!(generate(&fam).unwrap(), generate(&fam).unwrap());
        let other = Family::ErRandom {
            n: 8,
            p: 0.5,
            seed: 43,
        };
        assert_ne!(generate(&fam).unwrap(), generate(&other).unwrap());
        assert_eq!(
            generate(&Family::ErRandom {
                n: 6,
                p: 1.0,
                seed: 0
            })
            .unwrap()
            .edge_count(),
            15
        );
        assert_eq!(
            generate(&Family::ErRandom {
                n: 6,
                p: 0.0,
                seed: 0
            })
            .unwrap()
            .edge_count(),
            0
        );
    }

    #[test]
    fn parameter_errors() {
        assert!(generate(&Family::ErRandom {
            n: 4,
            p: 1.5,
            seed: 1
        })
        .is_err());
        assert!("cycle:-3".parse::<Family>().is_err());
        assert!("cycle:2"
            .parse::<Family>()
            .and_then(|f| generate(&f))
            .is_err());
        assert!("hypercube:3".parse::<Family>().is_err());
        assert!("er:5:0.5".parse::<Family>().is_err());
        assert_eq!("petersen".parse::<Family>().unwrap(), Family::Petersen);
    }
}
