//! Finite abelian groups C_{n_1} × … × C_{n_r} with a character, re-expressed
//! in coordinates u^t a_1^{e_1} … a_s^{e_s} adapted to the character.

use super::FamilyError;
use crate::scalars::Scalar;

/// Exponent vector against the user's cyclic generators.
pub type Vector = Vec<u32>;

#[derive(Clone, Debug)]
pub struct CyclicProduct {
    pub orders: Vec<u32>,
}

impl CyclicProduct {
    pub fn order(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    pub fn reduce(&self, v: &[i64]) -> Vector {
        v.iter()
            .zip(&self.orders)
            .map(|(&e, &o)| e.rem_euclid(o as i64) as u32)
            .collect()
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vector {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((&x, &y), &o)| (x + y) % o)
            .collect()
    }

    pub fn scale(&self, a: &[u32], k: i64) -> Vector {
        let v: Vec<i64> = a.iter().map(|&x| x as i64 * k).collect();
        self.reduce(&v)
    }

    pub fn identity(&self) -> Vector {
        vec![0; self.orders.len()]
    }

    pub fn is_identity(&self, a: &[u32]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub fn element_order(&self, a: &[u32]) -> u32 {
        let mut k = 1;
        let mut acc = a.to_vec();
        while !self.is_identity(&acc) {
            acc = self.add(&acc, a);
            k += 1;
        }
        k
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Vector> {
        let mut out = vec![Vec::new()];
        for &o in &self.orders {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..o).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// Coordinates (t, e) meaning u^t a^e with 0 ≤ t < m, 0 ≤ e_i < p_i.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub t: u32,
    pub e: Vec<u32>,
}

/// G = ⟨u⟩·K with K = ker χ = C_{p_1} × … × C_{p_s}, u^m = a^c.
#[derive(Clone, Debug)]
pub struct AdaptedGroup {
    pub ambient: CyclicProduct,
    /// m = ord χ.
    pub m: u32,
    pub p: Vec<u32>,
    /// u^m = a^c.
    pub c: Vec<u32>,
    pub u: Vector,
    pub a: Vec<Vector>,
    /// χ(u), a primitive m-th root of unity.
    pub eta: Scalar,
    to_coord: std::collections::HashMap<Vector, Coord>,
    to_vector: std::collections::HashMap<Coord, Vector>,
}

impl AdaptedGroup {
    /// `chi` gives χ on the user's generators; `prefer` is tried first as u.
    pub fn new(ambient: CyclicProduct, chi: &[Scalar], prefer: &[u32], force_prefer: bool) -> Result<Self, FamilyError> {
        if chi.len() != ambient.orders.len() {
            return Err(FamilyError::Invalid("one character value per cyclic factor".into()));
        }
        for (x, &o) in chi.iter().zip(&ambient.orders) {
            if !x.pow(o as i64)?.is_one() {
                return Err(FamilyError::Invalid(format!("chi value {x} is not an {o}-th root of unity")));
            }
        }
        let field = chi[0].field().clone();
        let chi_of = |v: &[u32]| -> Scalar {
            v.iter()
                .zip(chi)
                .fold(field.one(), |acc, (&e, x)| acc * x.pow(e as i64).unwrap())
        };
        let order_of = |s: &Scalar| s.root_of_unity_order().unwrap().unwrap() as u32;
        let elements = ambient.elements();
        let m = chi
            .iter()
            .map(|x| order_of(x) as u64)
            .fold(1u64, num_integer::lcm) as u32;
        let kernel: Vec<Vector> = elements.iter().filter(|v| chi_of(v).is_one()).cloned().collect();
        let u = if force_prefer || order_of(&chi_of(prefer)) == m {
            if order_of(&chi_of(prefer)) != m {
                return Err(FamilyError::Invalid("chi(g) must have order ord(chi)".into()));
            }
            prefer.to_vec()
        } else {
            elements
                .iter()
                .find(|v| order_of(&chi_of(v)) == m)
                .cloned()
                .expect("the image of chi is cyclic of order m")
        };
        let eta = chi_of(&u);

        // greedy cyclic decomposition of K
        let mut a: Vec<Vector> = Vec::new();
        let mut p: Vec<u32> = Vec::new();
        let mut span: Vec<Vector> = vec![ambient.identity()];
        while span.len() < kernel.len() {
            let coset_order = |v: &Vector| {
                let mut k = 1;
                let mut acc = v.clone();
                while !span.contains(&acc) {
                    acc = ambient.add(&acc, v);
                    k += 1;
                }
                k
            };
            let (best, r) = kernel
                .iter()
                .map(|v| (v, coset_order(v)))
                .fold(None::<(&Vector, u32)>, |best, (v, r)| match best {
                    Some((_, br)) if br >= r => best,
                    _ => Some((v, r)),
                })
                .unwrap();
            // lift to a representative of order r in the coset best·span
            let rep = span
                .iter()
                .map(|h| ambient.add(best, h))
                .find(|v| ambient.element_order(v) == r)
                .ok_or_else(|| FamilyError::Invalid("kernel decomposition failed".into()))?;
            let mut next = Vec::new();
            for h in &span {
                let mut acc = h.clone();
                for _ in 0..r {
                    next.push(acc.clone());
                    acc = ambient.add(&acc, &rep);
                }
            }
            span = next;
            a.push(rep);
            p.push(r);
        }

        let mut to_coord = std::collections::HashMap::new();
        let mut to_vector = std::collections::HashMap::new();
        let mut coords: Vec<Coord> = vec![Coord { t: 0, e: vec![] }];
        for &pi in &p {
            coords = coords
                .into_iter()
                .flat_map(|c| {
                    (0..pi).map(move |e| {
                        let mut c2 = c.clone();
                        c2.e.push(e);
                        c2
                    })
                })
                .collect();
        }
        for t in 0..m {
            for c in &coords {
                let coord = Coord { t, e: c.e.clone() };
                let mut v = ambient.scale(&u, t as i64);
                for (ai, &ei) in a.iter().zip(&coord.e) {
                    v = ambient.add(&v, &ambient.scale(ai, ei as i64));
                }
                if to_coord.insert(v.clone(), coord.clone()).is_some() {
                    return Err(FamilyError::Invalid("u and ker chi do not generate G freely".into()));
                }
                to_vector.insert(coord, v);
            }
        }
        if to_coord.len() != ambient.order() {
            return Err(FamilyError::Invalid("u and ker chi do not generate G".into()));
        }
        let um = ambient.scale(&u, m as i64);
        let c = to_coord[&um].e.clone();
        Ok(AdaptedGroup {
            ambient,
            m,
            p,
            c,
            u,
            a,
            eta,
            to_coord,
            to_vector,
        })
    }

    pub fn order(&self) -> usize {
        self.ambient.order()
    }

    pub fn kernel_order(&self) -> u32 {
        self.p.iter().product()
    }

    pub fn coord(&self, v: &[u32]) -> &Coord {
        &self.to_coord[v]
    }

    pub fn vector(&self, c: &Coord) -> &Vector {
        &self.to_vector[c]
    }

    pub fn identity(&self) -> Coord {
        Coord {
            t: 0,
            e: vec![0; self.p.len()],
        }
    }

    pub fn mul(&self, x: &Coord, y: &Coord) -> Coord {
        let mut t = x.t + y.t;
        let mut e: Vec<u32> = x.e.iter().zip(&y.e).map(|(a, b)| a + b).collect();
        if t >= self.m {
            t -= self.m;
            for (ei, ci) in e.iter_mut().zip(&self.c) {
                *ei += ci;
            }
        }
        for (ei, &pi) in e.iter_mut().zip(&self.p) {
            *ei %= pi;
        }
        Coord { t, e }
    }

    pub fn pow(&self, x: &Coord, k: i64) -> Coord {
        let v = self.ambient.scale(self.vector(x), k);
        self.coord(&v).clone()
    }

    pub fn inverse(&self, x: &Coord) -> Coord {
        self.pow(x, -1)
    }

    /// Every element, ordered by coordinates.
    pub fn elements(&self) -> Vec<Coord> {
        let mut v: Vec<Coord> = self.to_vector.keys().cloned().collect();
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;

    #[test]
    fn c4_with_sign_character() {
        let f = Field::cyclotomic(4).unwrap();
        let g = AdaptedGroup::new(CyclicProduct { orders: vec![4] }, &[f.int(-1)], &[1], true).unwrap();
        assert_eq!(g.m, 2);
        assert_eq!(g.p, vec![2]);
        // u = g, u^2 = a
        assert_eq!(g.c, vec![1]);
        let u = g.coord(&[1]).clone();
        assert_eq!(u, Coord { t: 1, e: vec![0] });
        assert_eq!(g.mul(&u, &u), Coord { t: 0, e: vec![1] });
    }

    #[test]
    fn klein_four() {
        let f = Field::cyclotomic(2).unwrap();
        let g = AdaptedGroup::new(CyclicProduct { orders: vec![2, 2] }, &[f.int(-1), f.int(-1)], &[1, 0], false).unwrap();
        assert_eq!(g.m, 2);
        assert_eq!(g.p, vec![2]);
        assert_eq!(g.a, vec![vec![1, 1]]);
        assert_eq!(g.elements().len(), 4);
    }
}
