use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use super::{AffinePoint, Automorphism, CurveError, HermitianModel};
use crate::gf::{is_prime, make_field, FieldElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PresetCase {
    /// `<phi_{0,1,1}> x <phi_{0,0,lambda}>`, d | q+1
    I,
    /// `<phi_{0,1,1}> : <phi_{0,0,lambda}>`, d | p-1
    II,
    /// `<phi_{1,omega/2,1}> : <phi_{0,0,lambda}>`, d | p-1
    III,
}

/// One of the three order-dp subgroups of the stabilizer of the point at
/// infinity, on the minus canonical form.
#[derive(Clone, Debug)]
pub struct GroupPreset {
    pub case: PresetCase,
    pub p: u32,
    pub h: u32,
    pub d: u32,
    pub model: HermitianModel,
    /// Order-p generator.
    pub s: Automorphism,
    /// Order-d generator `phi_{0,0,lambda}`.
    pub t: Automorphism,
    pub lambda: FieldElement,
    pub elements: Vec<Automorphism>,
}

pub fn build_dp_group(case: PresetCase, p: u32, h: u32, d: u32) -> Result<GroupPreset, CurveError> {
    if !is_prime(d as u64) {
        return Err(CurveError::DNotPrime(d));
    }
    if d == p {
        return Err(CurveError::DEqualsP);
    }
    if p == 2 {
        return Err(CurveError::Characteristic(p));
    }
    let q = (p as u64).pow(h);
    let (ok, divides) = match case {
        PresetCase::I => ((q + 1).is_multiple_of(d as u64), "q+1"),
        PresetCase::II | PresetCase::III => ((p - 1).is_multiple_of(d), "p-1"),
    };
    if !ok {
        let family = match case {
            PresetCase::I => super::Family::FamilyI,
            PresetCase::II => super::Family::FamilyII,
            PresetCase::III => super::Family::FamilyIII,
        };
        return Err(CurveError::Divisibility { family, d, divides });
    }
    let field = Arc::new(make_field(p, 2 * h as usize)?);
    let omega = field.find_omega()?;
    let model = HermitianModel::minus(field.clone(), h, omega);
    let f = &*field;

    let lambda = f
        .elements_lex()
        .find(|&e| f.multiplicative_order(e) == Some(d as u64))
        .ok_or(CurveError::NoElementOfOrder(d))?;
    let s = match case {
        PresetCase::I | PresetCase::II => model.automorphism(f.zero(), f.one(), f.one())?,
        PresetCase::III => {
            let half_omega = f.mul(omega, f.inv(f.from_int(2))?);
            model.automorphism(f.one(), half_omega, f.one())?
        }
    };
    let t = model.automorphism(f.zero(), f.zero(), lambda)?;
    let elements = closure(&model, &[s, t], (p * d) as usize)?;
    Ok(GroupPreset {
        case,
        p,
        h,
        d,
        model,
        s,
        t,
        lambda,
        elements,
    })
}

fn closure(model: &HermitianModel, gens: &[Automorphism], expected: usize) -> Result<Vec<Automorphism>, CurveError> {
    let cap = 4 * expected;
    let id = model.identity();
    let mut seen: HashSet<Automorphism> = HashSet::from([id]);
    let mut order = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for gen in gens {
            let next = model.compose(gen, &g)?;
            if seen.insert(next) {
                if seen.len() > cap {
                    return Err(CurveError::ClosureOverflow(cap));
                }
                order.push(next);
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

impl GroupPreset {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Automorphism) -> bool {
        self.elements.contains(g)
    }

    pub fn is_abelian(&self) -> bool {
        let st = self.model.compose(&self.s, &self.t).expect("same form");
        let ts = self.model.compose(&self.t, &self.s).expect("same form");
        st == ts
    }

    /// `t^-1 s t`.
    pub fn conjugate_s_by_t(&self) -> Automorphism {
        let m = &self.model;
        let st = m.compose(&self.s, &self.t).expect("same form");
        m.compose(&m.inverse(&self.t), &st).expect("same form")
    }

    /// The `i` in `1..p` with `t^-1 s t = s^i`, if the conjugate lies in `<s>`.
    pub fn conjugation_exponent(&self) -> Option<u64> {
        let target = self.conjugate_s_by_t();
        (1..self.p as u64).find(|&i| self.model.power(&self.s, i).expect("same form") == target)
    }

    /// Order of an element by repeated composition.
    pub fn element_order(&self, g: &Automorphism) -> u64 {
        let id = self.model.identity();
        let mut cur = *g;
        let mut n = 1;
        while cur != id {
            cur = self.model.compose(g, &cur).expect("same form");
            n += 1;
        }
        n
    }
}

/// Orbits of the preset on affine Hermitian points. The point at infinity
/// is fixed by every preset and is reported as a flag, not a coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub orbits: Vec<Vec<AffinePoint>>,
    pub infinity_fixed: bool,
}

impl OrbitPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }
}

pub fn orbits(preset: &GroupPreset, points: &[AffinePoint]) -> Result<OrbitPartition, CurveError> {
    let m = &preset.model;
    if points.iter().any(|&pt| !m.on_curve(pt)) {
        return Err(CurveError::NotOnCurve);
    }
    let index: HashMap<AffinePoint, usize> = points.iter().enumerate().map(|(i, &pt)| (pt, i)).collect();
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (i, &pt) in points.iter().enumerate() {
        for g in [&preset.s, &preset.t] {
            let image = m.apply_unchecked(g, pt);
            // images outside the input set would mean the set is not G-stable
            let Some(&j) = index.get(&image) else {
                return Err(CurveError::NotOnCurve);
            };
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<AffinePoint>> = HashMap::new();
    for (i, &pt) in points.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(pt);
    }
    let mut keyed: Vec<(usize, Vec<AffinePoint>)> = groups.into_iter().collect();
    keyed.sort_by_key(|(root, _)| *root);
    Ok(OrbitPartition {
        orbits: keyed.into_iter().map(|(_, o)| o).collect(),
        infinity_fixed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_i_small() {
        let g = build_dp_group(PresetCase::I, 5, 2, 13).unwrap();
        assert_eq!(g.order(), 65);
        assert!(g.is_abelian());
        assert_eq!(g.element_order(&g.s), 5);
        assert_eq!(g.element_order(&g.t), 13);
    }

    #[test]
    fn case_ii_conjugation() {
        let g = build_dp_group(PresetCase::II, 11, 1, 5).unwrap();
        assert_eq!(g.order(), 55);
        assert!(!g.is_abelian());
        let i = g.conjugation_exponent().unwrap();
        assert_ne!(i, 1);
        // i = 1 / lambda^(q+1) in F_p
        let f = &*g.model.field;
        let lq1 = f.pow(g.lambda, g.model.q + 1);
        assert_eq!(f.mul(f.from_int(i as i64), lq1), f.one());
    }

    #[test]
    fn divisibility_errors() {
        assert!(matches!(
            build_dp_group(PresetCase::II, 7, 2, 5),
            Err(CurveError::Divisibility { .. })
        ));
        assert!(matches!(build_dp_group(PresetCase::I, 7, 2, 7), Err(CurveError::DEqualsP)));
    }

    #[test]
    fn orbit_partition_covers_points() {
        let g = build_dp_group(PresetCase::III, 11, 1, 5).unwrap();
        let pts = g.model.points();
        let part = orbits(&g, &pts).unwrap();
        assert_eq!(part.sizes().iter().sum::<usize>(), 1331);
        assert!(part.sizes().iter().all(|&s| 55 % s == 0));
        assert!(part.infinity_fixed);
    }
}
