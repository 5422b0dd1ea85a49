//! Brute-force ground truth: breadth-first search over the Cayley graph of
//! BS(1,2) with the standard generating set.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::group::{eval_word, GroupElement};
use crate::words::{Letter, Word};

/// Default cap on BFS radius; ball sizes grow exponentially and this keeps
/// the distance map in the tens of millions of elements at worst.
pub const DEFAULT_RADIUS_CAP: u32 = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("radius {radius} exceeds the cap {cap}")]
    CapExceeded { radius: u32, cap: u32 },
    #[error("element lies outside the computed ball")]
    OutOfBall,
}

/// Exact distances for every element within a given radius of the identity.
#[derive(Debug, Clone)]
pub struct Ball {
    radius: u32,
    distances: HashMap<GroupElement, u32>,
    sphere_sizes: Vec<usize>,
}

impl Ball {
    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    pub fn distance(&self, g: &GroupElement) -> Option<u32> {
        self.distances.get(g).copied()
    }

    /// |sphere(n)| for n = 0..=radius.
    pub fn sphere_sizes(&self) -> &[usize] {
        &self.sphere_sizes
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, u32)> {
        self.distances.iter().map(|(g, &d)| (g, d))
    }
}

/// Frontier-layered BFS from the identity, multiplying generators on the
/// right; deterministic.
pub fn bfs_ball_with_cap(radius: u32, cap: u32) -> Result<Ball, OracleError> {
    if radius > cap {
        return Err(OracleError::CapExceeded { radius, cap });
    }
    let mut distances = HashMap::new();
    let mut sphere_sizes = Vec::with_capacity(radius as usize + 1);
    let mut frontier = vec![GroupElement::identity()];
    distances.insert(GroupElement::identity(), 0);
    sphere_sizes.push(1);
    for d in 1..=radius {
        let mut next = Vec::new();
        for g in &frontier {
            for l in Letter::ALL {
                let h = g.mul_letter(l);
                if !distances.contains_key(&h) {
                    distances.insert(h.clone(), d);
                    next.push(h);
                }
            }
        }
        sphere_sizes.push(next.len());
        frontier = next;
    }
    Ok(Ball {
        radius,
        distances,
        sphere_sizes,
    })
}

pub fn bfs_ball(radius: u32) -> Result<Ball, OracleError> {
    bfs_ball_with_cap(radius, DEFAULT_RADIUS_CAP)
}

/// True iff `w` has minimal length among the words representing its element.
/// Errors when the element lies outside the ball; a word longer than the
/// radius whose element is inside cannot be geodesic.
pub fn is_geodesic(w: &Word, ball: &Ball) -> Result<bool, OracleError> {
    let d = ball.distance(&eval_word(w)).ok_or(OracleError::OutOfBall)?;
    Ok(w.len() == d as usize)
}

/// Every geodesic word for `g`, by walking BFS layers backwards.
pub fn all_geodesics(g: &GroupElement, ball: &Ball) -> Result<BTreeSet<Word>, OracleError> {
    let d = ball.distance(g).ok_or(OracleError::OutOfBall)?;
    fn rec(g: &GroupElement, d: u32, ball: &Ball) -> BTreeSet<Word> {
        if d == 0 {
            return BTreeSet::from([Word::empty()]);
        }
        let mut out = BTreeSet::new();
        for l in Letter::ALL {
            let h = g.mul_letter(l.inverse());
            if ball.distance(&h) == Some(d - 1) {
                for mut w in rec(&h, d - 1, ball) {
                    w.push(l);
                    out.insert(w);
                }
            }
        }
        out
    }
    Ok(rec(g, d, ball))
}

/// |sphere(n)| for n = 0..=radius under the default cap.
pub fn sphere_sizes(radius: u32) -> Result<Vec<usize>, OracleError> {
    Ok(bfs_ball(radius)?.sphere_sizes().to_vec())
}
