//! Properties of colourings (sets of proper colourings of a fixed graph)
//! and exhaustive checks of the structural claims made about them.
//!
//! A property's declared flags are never trusted by the checks here; the
//! checks exist to test those declarations.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use super::{proper_colorings, Coloring, Guards};
use crate::graph::Graph;
use crate::lonely::{frame_m, small};
use crate::{Error, Result};

type Predicate = dyn Fn(&Coloring) -> bool + Send + Sync;

#[derive(Clone)]
pub struct ColoringProperty {
    name: String,
    predicate: Arc<Predicate>,
    pub declared_frame_property: bool,
    pub declared_singleton_friendly: bool,
}

impl fmt::Debug for ColoringProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoringProperty")
            .field("name", &self.name)
            .field("declared_frame_property", &self.declared_frame_property)
            .field(
                "declared_singleton_friendly",
                &self.declared_singleton_friendly,
            )
            .finish()
    }
}

impl ColoringProperty {
    pub fn new(
        name: impl Into<String>,
        predicate: impl Fn(&Coloring) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            predicate: Arc::new(predicate),
            declared_frame_property: false,
            declared_singleton_friendly: false,
        }
    }

    pub fn declared(mut self, frame_property: bool, singleton_friendly: bool) -> Self {
        self.declared_frame_property = frame_property;
        self.declared_singleton_friendly = singleton_friendly;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn test(&self, c: &Coloring) -> bool {
        (self.predicate)(c)
    }

    /// Every colouring.
    pub fn all() -> Self {
        Self::new("all", |_| true).declared(true, true)
    }

    /// No colouring.
    pub fn none() -> Self {
        Self::new("none", |_| false).declared(true, true)
    }

    /// Colourings with at most `k` singleton classes.
    pub fn at_most_singletons(k: usize) -> Self {
        Self::new(format!("at-most-{k}-singletons"), move |c| {
            c.singleton_count() <= k
        })
        .declared(true, true)
    }

    /// Membership in an explicit set of colourings.
    pub fn from_set(name: impl Into<String>, set: HashSet<Coloring>) -> Self {
        Self::new(name, move |c| set.contains(c))
    }

    pub fn union(&self, other: &Self) -> Self {
        let (a, b) = (self.predicate.clone(), other.predicate.clone());
        Self::new(format!("({})|({})", self.name, other.name), move |c| {
            a(c) || b(c)
        })
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let (a, b) = (self.predicate.clone(), other.predicate.clone());
        Self::new(format!("({})&({})", self.name, other.name), move |c| {
            a(c) && b(c)
        })
    }
}

/// B_r: colourings whose classes all have at most `r` vertices. Declared a
/// singleton-friendly frame property for r ≥ 2; for r = 1 merging two
/// singletons leaves B_1, so singleton-friendliness is declared false.
pub fn b_r(r: usize) -> Result<ColoringProperty> {
    if r == 0 {
        return Err(Error::InvalidParam("B_r needs r >= 1".into()));
    }
    Ok(
        ColoringProperty::new(format!("B_{r}"), move |c| c.max_class_size() <= r)
            .declared(true, r >= 2),
    )
}

/// Checks that membership is constant on every group of colourings sharing
/// the same key; returns a pair (inside, outside) breaking this.
fn closure_break<K: Ord>(
    colorings: &[Coloring],
    p: &ColoringProperty,
    key: impl Fn(&Coloring) -> K,
) -> Option<(Coloring, Coloring)> {
    let mut groups: BTreeMap<K, (Option<&Coloring>, Option<&Coloring>)> = BTreeMap::new();
    for c in colorings {
        let slot = groups.entry(key(c)).or_default();
        if p.test(c) {
            slot.0.get_or_insert(c);
        } else {
            slot.1.get_or_insert(c);
        }
        if let (Some(a), Some(b)) = *slot {
            return Some((a.clone(), b.clone()));
        }
    }
    None
}

/// A frame-equal pair with only the first colouring in `p`, if any.
pub fn frame_property_break(
    g: &Graph,
    p: &ColoringProperty,
    guards: &Guards,
) -> Result<Option<(Coloring, Coloring)>> {
    let all = proper_colorings(g, guards)?;
    Ok(closure_break(&all, p, Coloring::frame))
}

/// A colouring in `p` with two mergeable singleton classes whose merge
/// falls outside `p`, if any.
pub fn singleton_friendly_break(
    g: &Graph,
    p: &ColoringProperty,
    guards: &Guards,
) -> Result<Option<(Coloring, Coloring)>> {
    for c in proper_colorings(g, guards)? {
        if !p.test(&c) {
            continue;
        }
        let singles = c.singleton_count();
        for i in 0..singles {
            for j in i + 1..singles {
                let v = c.classes()[i].trailing_zeros() as usize;
                if g.neighbors(v) & c.classes()[j] != 0 {
                    continue;
                }
                let merged = c.merged(i, j);
                if !p.test(&merged) {
                    return Ok(Some((c, merged)));
                }
            }
        }
    }
    Ok(None)
}

/// Membership depends only on the frame.
pub fn is_frame_property(g: &Graph, p: &ColoringProperty, guards: &Guards) -> Result<bool> {
    Ok(frame_property_break(g, p, guards)?.is_none())
}

/// Closed under merging two non-adjacent singleton classes.
pub fn is_singleton_friendly(g: &Graph, p: &ColoringProperty, guards: &Guards) -> Result<bool> {
    Ok(singleton_friendly_break(g, p, guards)?.is_none())
}

/// Membership depends only on the frame suffix from the first 3 on.
pub fn check_frame3_sufficiency(g: &Graph, p: &ColoringProperty, guards: &Guards) -> Result<bool> {
    let all = proper_colorings(g, guards)?;
    Ok(closure_break(&all, p, |c| frame_m(c, 3)).is_none())
}

/// Membership depends only on `(Small(C), Frame_3(C))`.
pub fn check_complete_condition(g: &Graph, p: &ColoringProperty, guards: &Guards) -> Result<bool> {
    let all = proper_colorings(g, guards)?;
    Ok(closure_break(&all, p, |c| (small(c), frame_m(c, 3))).is_none())
}

/// χ_P(G) with the first P-optimal colouring in enumeration order.
pub fn chi_p(g: &Graph, p: &ColoringProperty, guards: &Guards) -> Result<(usize, Coloring)> {
    let mut best: Option<Coloring> = None;
    for c in proper_colorings(g, guards)? {
        if p.test(&c) && best.as_ref().is_none_or(|b| c.len() < b.len()) {
            best = Some(c);
        }
    }
    best.map(|c| (c.len(), c))
        .ok_or_else(|| Error::Unsatisfiable(p.name().to_string()))
}

/// Every P-optimal colouring, in enumeration order.
pub fn p_optimal_colorings(
    g: &Graph,
    p: &ColoringProperty,
    guards: &Guards,
) -> Result<Vec<Coloring>> {
    let satisfying: Vec<Coloring> = proper_colorings(g, guards)?
        .into_iter()
        .filter(|c| p.test(c))
        .collect();
    let Some(k) = satisfying.iter().map(Coloring::len).min() else {
        return Err(Error::Unsatisfiable(p.name().to_string()));
    };
    Ok(satisfying.into_iter().filter(|c| c.len() == k).collect())
}
