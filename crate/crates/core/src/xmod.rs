//! Crossed modules, their morphisms and 2-morphisms, and the functor `T` to
//! strict 2-groups.
//!
//! `T(G, H, ▷, ∂)` has objects `G` and arrows `H ⋊ G`, with the pair `(h, g)`
//! encoded as the index `h·|G| + g` and
//! `(h₁, g₁)(h₂, g₂) = (h₁ (g₁ ▷ h₂), g₁ g₂)`,
//! `s(h, g) = g`, `t(h, g) = ∂(h) g`, `ι(g) = (e, g)`.
//! In these conventions `(h₁, g₁) ∘ (h₂, g₂) = (h₁ h₂, g₂)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fingrp::{aut_group, check_hom, FiniteGroup, GroupError, DEFAULT_MAX_ORDER};
use crate::report::{first_failure, Report};
use crate::twogroup::{InternalFunctor, InternalNatTransf, TwoGroup};

/// `(G, H, ▷, ∂)` with the action stored as `action[g·|H| + h] = g ▷ h`.
///
/// The boundary is a raw image array, so that corrupted data can be diagnosed by
/// [`validate_xmod`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    g: Arc<FiniteGroup>,
    h: Arc<FiniteGroup>,
    action: Vec<usize>,
    boundary: Vec<usize>,
}

impl CrossedModule {
    /// Checks only shapes; the axioms are left to [`validate_xmod`].
    pub fn new(
        g: Arc<FiniteGroup>,
        h: Arc<FiniteGroup>,
        action: Vec<Vec<usize>>,
        boundary: Vec<usize>,
    ) -> Result<CrossedModule> {
        let (ng, nh) = (g.order(), h.order());
        if action.len() != ng || action.iter().any(|row| row.len() != nh || row.iter().any(|&x| x >= nh)) {
            return Err(Error::invalid(
                "crossed module",
                format!("action table must be {ng}×{nh} with entries in H"),
            ));
        }
        if boundary.len() != nh || boundary.iter().any(|&x| x >= ng) {
            return Err(Error::invalid("crossed module", "boundary has the wrong shape"));
        }
        Ok(CrossedModule {
            g,
            h,
            action: action.into_iter().flatten().collect(),
            boundary,
        })
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        &self.g
    }

    pub fn h(&self) -> &Arc<FiniteGroup> {
        &self.h
    }

    /// `g ▷ h`
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action[g * self.h.order() + h]
    }

    pub fn boundary(&self, h: usize) -> usize {
        self.boundary[h]
    }

    pub fn boundary_map(&self) -> &[usize] {
        &self.boundary
    }

    /// The same data with a different boundary map.
    pub fn with_boundary(&self, boundary: Vec<usize>) -> Result<CrossedModule> {
        let rows = self.action.chunks(self.h.order()).map(<[usize]>::to_vec).collect();
        CrossedModule::new(self.g.clone(), self.h.clone(), rows, boundary)
    }

    /// Index of `(h, g)` in `H ⋊ G`.
    pub fn pair_index(&self, h: usize, g: usize) -> usize {
        h * self.g.order() + g
    }

    /// `(h₁, g₁) ∘ (h₂, g₂) = (h₁h₂, g₂)` on semidirect-product indices.
    pub fn explicit_compose(&self, a: usize, b: usize) -> usize {
        let n = self.g.order();
        self.pair_index(self.h.mul(a / n, b / n), b % n)
    }

    /// Build `T(self)`, validating that the semidirect-product table is a group.
    /// The boundary is not required to satisfy the axioms; use
    /// [`crate::twogroup::validate_2group`] on the result.
    pub fn to_2group(&self) -> Result<TwoGroup> {
        self.to_2group_capped(DEFAULT_MAX_ORDER)
    }

    pub fn to_2group_capped(&self, max_order: usize) -> Result<TwoGroup> {
        let (g, h) = (&self.g, &self.h);
        let (ng, nh) = (g.order(), h.order());
        let n = ng * nh;
        if n > max_order {
            return Err(GroupError::TooLarge {
                order: n,
                cap: max_order,
            }
            .into());
        }
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let (h1, g1) = (a / ng, a % ng);
                (0..n)
                    .map(|b| {
                        let (h2, g2) = (b / ng, b % ng);
                        self.pair_index(h.mul(h1, self.act(g1, h2)), g.mul(g1, g2))
                    })
                    .collect()
            })
            .collect();
        let names = (0..n)
            .map(|a| format!("({},{})", h.name(a / ng), g.name(a % ng)))
            .collect();
        let g1 = Arc::new(FiniteGroup::from_table_capped(table, Some(names), max_order)?);
        let s = (0..n).map(|a| a % ng).collect();
        let t = (0..n).map(|a| g.mul(self.boundary(a / ng), a % ng)).collect();
        let iota = (0..ng).map(|x| self.pair_index(h.identity(), x)).collect();
        TwoGroup::new(g.clone(), g1, s, t, iota)
    }
}

/// Check the action, boundary, equivariance and Peiffer axioms exhaustively.
pub fn validate_xmod(x: &CrossedModule) -> Report {
    let (g, h) = (x.g(), x.h());
    let mut r = Report::new();
    r.check(
        "action.automorphism",
        "g ▷ (h h′) = (g ▷ h)(g ▷ h′)",
        first_failure(g.elements(), |&a| {
            h.elements()
                .flat_map(|b| h.elements().map(move |c| (b, c)))
                .find(|&(b, c)| x.act(a, h.mul(b, c)) != h.mul(x.act(a, b), x.act(a, c)))
                .map(|(b, c)| format!("g = {}, h = {}, h′ = {}", g.name(a), h.name(b), h.name(c)))
        }),
    );
    r.check(
        "action.unit",
        "e ▷ h = h",
        first_failure(h.elements(), |&b| {
            (x.act(g.identity(), b) != b).then(|| format!("h = {}", h.name(b)))
        }),
    );
    r.check(
        "action.compatibility",
        "(g₁ g₂) ▷ h = g₁ ▷ (g₂ ▷ h)",
        first_failure(g.elements(), |&a| {
            g.elements()
                .flat_map(|b| h.elements().map(move |c| (b, c)))
                .find(|&(b, c)| x.act(g.mul(a, b), c) != x.act(a, x.act(b, c)))
                .map(|(b, c)| format!("g₁ = {}, g₂ = {}, h = {}", g.name(a), g.name(b), h.name(c)))
        }),
    );
    r.check(
        "boundary.homomorphism",
        "∂ is a group homomorphism",
        check_hom(h, g, x.boundary_map()),
    );
    r.check(
        "equivariance",
        "∂(g ▷ h) = g ∂(h) g⁻¹",
        first_failure(g.elements(), |&a| {
            h.elements()
                .find(|&b| x.boundary(x.act(a, b)) != g.conjugate(a, x.boundary(b)))
                .map(|b| format!("g = {}, h = {}", g.name(a), h.name(b)))
        }),
    );
    r.check(
        "peiffer",
        "∂(h) ▷ h′ = h h′ h⁻¹",
        first_failure(h.elements(), |&a| {
            h.elements()
                .find(|&b| x.act(x.boundary(a), b) != h.conjugate(a, b))
                .map(|b| format!("h = {}, h′ = {}", h.name(a), h.name(b)))
        }),
    );
    r
}

/// `(Aut H, H, evaluation, conjugation)`.
pub fn xmod_from_aut(h: Arc<FiniteGroup>) -> Result<CrossedModule> {
    let (g, auts) = aut_group(&h);
    let boundary = h
        .elements()
        .map(|a| {
            let conj: Vec<usize> = h.elements().map(|b| h.conjugate(a, b)).collect();
            auts.binary_search(&conj)
                .expect("inner automorphisms are automorphisms")
        })
        .collect();
    CrossedModule::new(g, h, auts, boundary)
}

/// `(G, N, conjugation, inclusion)` for a normal subgroup given by its sorted elements.
pub fn xmod_from_normal(g: Arc<FiniteGroup>, elements: &[usize]) -> Result<CrossedModule> {
    let (n, incl) = crate::fingrp::subgroup(&g, elements)?;
    let index = |x: usize| elements.binary_search(&x).ok();
    let action = g
        .elements()
        .map(|a| {
            elements
                .iter()
                .map(|&x| {
                    index(g.conjugate(a, x))
                        .ok_or_else(|| Error::invalid("normal subgroup", "not closed under conjugation"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    CrossedModule::new(g, n, action, incl.map().to_vec())
}

/// `(G, H, ▷, trivial)` for an abelian `H` with `G` acting by automorphisms.
pub fn xmod_from_module(g: Arc<FiniteGroup>, h: Arc<FiniteGroup>, action: Vec<Vec<usize>>) -> Result<CrossedModule> {
    if !h.is_abelian() {
        return Err(Error::Precondition(
            "H is not abelian, so the Peiffer identity fails for the trivial boundary".into(),
        ));
    }
    let boundary = vec![g.identity(); h.order()];
    let x = CrossedModule::new(g, h, action, boundary)?;
    let rep = validate_xmod(&x);
    if let Some(f) = rep.failures().next() {
        return Err(Error::invalid(
            "module action",
            format!("{}: {}", f.law, f.counterexample.clone().unwrap_or_default()),
        ));
    }
    Ok(x)
}

/// The diagnostic inverse direction: `(G₀, ker s, ι-conjugation, t|ker s)`.
pub fn xmod_from_2group(tg: &TwoGroup) -> Result<CrossedModule> {
    let s = tg.s_hom()?;
    let (h, incl) = crate::fingrp::subgroup(tg.g1(), &s.kernel())?;
    let g1 = tg.g1();
    let index = |a: usize| incl.map().binary_search(&a).ok();
    let mut action = Vec::with_capacity(tg.g0().order());
    for x in tg.g0().elements() {
        let row: Option<Vec<usize>> = h
            .elements()
            .map(|k| index(g1.conjugate(tg.iota(x), incl.apply(k))))
            .collect();
        action.push(row.ok_or_else(|| Error::invalid("2-group", "ker s is not normalized by ι"))?);
    }
    let boundary = h.elements().map(|k| tg.t(incl.apply(k))).collect();
    CrossedModule::new(tg.g0().clone(), h, action, boundary)
}

/// A morphism of crossed modules `(F_G, F_H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModHom {
    pub src: Arc<CrossedModule>,
    pub dst: Arc<CrossedModule>,
    pub f_g: Vec<usize>,
    pub f_h: Vec<usize>,
}

impl XModHom {
    pub fn new(src: Arc<CrossedModule>, dst: Arc<CrossedModule>, f_g: Vec<usize>, f_h: Vec<usize>) -> Result<XModHom> {
        let f = XModHom { src, dst, f_g, f_h };
        let rep = f.validate();
        let first = rep.failures().next().cloned();
        match first {
            None => Ok(f),
            Some(r) => Err(Error::invalid(
                "crossed module morphism",
                format!("{} fails: {}", r.law, r.counterexample.unwrap_or_default()),
            )),
        }
    }

    pub fn identity(x: Arc<CrossedModule>) -> XModHom {
        XModHom {
            f_g: x.g().elements().collect(),
            f_h: x.h().elements().collect(),
            src: x.clone(),
            dst: x,
        }
    }

    pub fn validate(&self) -> Report {
        let (x, y) = (&self.src, &self.dst);
        let mut r = Report::new();
        r.check(
            "hom.g",
            "F_G is a group homomorphism",
            check_hom(x.g(), y.g(), &self.f_g),
        );
        r.check(
            "hom.h",
            "F_H is a group homomorphism",
            check_hom(x.h(), y.h(), &self.f_h),
        );
        r.check(
            "boundary",
            "F_G(∂(h)) = ∂′(F_H(h))",
            first_failure(x.h().elements(), |&h| {
                (self.f_g[x.boundary(h)] != y.boundary(self.f_h[h])).then(|| format!("h = {}", x.h().name(h)))
            }),
        );
        r.check(
            "action",
            "F_H(g ▷ h) = F_G(g) ▷′ F_H(h)",
            first_failure(x.g().elements(), |&g| {
                x.h()
                    .elements()
                    .find(|&h| self.f_h[x.act(g, h)] != y.act(self.f_g[g], self.f_h[h]))
                    .map(|h| format!("g = {}, h = {}", x.g().name(g), x.h().name(h)))
            }),
        );
        r
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &XModHom) -> Result<XModHom> {
        if self.dst != next.src {
            return Err(Error::Mismatch("crossed module morphisms are not composable".into()));
        }
        Ok(XModHom {
            src: self.src.clone(),
            dst: next.dst.clone(),
            f_g: self.f_g.iter().map(|&a| next.f_g[a]).collect(),
            f_h: self.f_h.iter().map(|&a| next.f_h[a]).collect(),
        })
    }

    /// `T(F) = (F_G, F_H × F_G)` between `T(src)` and `T(dst)`.
    pub fn to_internal_functor(&self, src: Arc<TwoGroup>, dst: Arc<TwoGroup>) -> Result<InternalFunctor> {
        let (x, y) = (&self.src, &self.dst);
        if src.g1().order() != x.g().order() * x.h().order() || dst.g1().order() != y.g().order() * y.h().order() {
            return Err(Error::Mismatch("2-groups do not match the crossed modules".into()));
        }
        let ng = x.g().order();
        let f1 = (0..src.g1().order())
            .map(|a| y.pair_index(self.f_h[a / ng], self.f_g[a % ng]))
            .collect();
        InternalFunctor::new(src, dst, self.f_g.clone(), f1)
    }
}

/// A 2-morphism `η: F ⇒ F̃` of crossed module morphisms, given by `η_H: G → H′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XMod2Hom {
    pub source: XModHom,
    pub target: XModHom,
    pub eta_h: Vec<usize>,
}

impl XMod2Hom {
    /// Validates the four axioms; a violation is an error.
    pub fn new(source: XModHom, target: XModHom, eta_h: Vec<usize>) -> Result<XMod2Hom> {
        let n = XMod2Hom { source, target, eta_h };
        let rep = n.validate();
        let first = rep.failures().next().cloned();
        match first {
            None => Ok(n),
            Some(r) => Err(Error::invalid(
                "crossed module 2-morphism",
                format!("{} fails: {}", r.law, r.counterexample.unwrap_or_default()),
            )),
        }
    }

    pub fn validate(&self) -> Report {
        let (f, ft) = (&self.source, &self.target);
        let (x, y) = (&f.src, &f.dst);
        let mut r = Report::new();
        if f.src != ft.src
            || f.dst != ft.dst
            || self.eta_h.len() != x.g().order()
            || self.eta_h.iter().any(|&a| a >= y.h().order())
        {
            r.check(
                "shape",
                "η_H: G → H′ between parallel morphisms",
                Err("signature mismatch".into()),
            );
            return r;
        }
        let (g, h2, g2) = (x.g(), y.h(), y.g());
        let eta = &self.eta_h;
        r.check(
            "unit",
            "η_H(e) = e",
            (eta[g.identity()] == h2.identity())
                .then_some(())
                .ok_or_else(|| format!("η_H(e) = {}", h2.name(eta[g.identity()]))),
        );
        r.check(
            "cocycle",
            "η_H(g₁ g₂) = η_H(g₁) (F_G(g₁) ▷′ η_H(g₂))",
            first_failure(g.elements(), |&a| {
                g.elements()
                    .find(|&b| eta[g.mul(a, b)] != h2.mul(eta[a], y.act(f.f_g[a], eta[b])))
                    .map(|b| format!("g₁ = {}, g₂ = {}", g.name(a), g.name(b)))
            }),
        );
        r.check(
            "boundary",
            "∂′(η_H(g)) = F̃_G(g) F_G(g)⁻¹",
            first_failure(g.elements(), |&a| {
                (y.boundary(eta[a]) != g2.mul(ft.f_g[a], g2.inv(f.f_g[a]))).then(|| format!("g = {}", g.name(a)))
            }),
        );
        r.check(
            "restriction",
            "η_H(∂(h)) = F̃_H(h) F_H(h)⁻¹",
            first_failure(x.h().elements(), |&hh| {
                (eta[x.boundary(hh)] != h2.mul(ft.f_h[hh], h2.inv(f.f_h[hh])))
                    .then(|| format!("h = {}", x.h().name(hh)))
            }),
        );
        r
    }

    /// `T(η)(g) = (η_H(g), F_G(g))`.
    pub fn to_internal_nat_transf(&self, src: Arc<TwoGroup>, dst: Arc<TwoGroup>) -> Result<InternalNatTransf> {
        let f = self.source.to_internal_functor(src.clone(), dst.clone())?;
        let ft = self.target.to_internal_functor(src, dst)?;
        let y = &self.source.dst;
        let eta = self
            .eta_h
            .iter()
            .zip(&self.source.f_g)
            .map(|(&h, &g)| y.pair_index(h, g))
            .collect();
        InternalNatTransf::new(f, ft, eta)
    }
}

/// All valid `η_H` between two parallel morphisms, by exhaustive search.
pub fn enumerate_2homs(source: &XModHom, target: &XModHom) -> Vec<XMod2Hom> {
    let ng = source.src.g().order();
    let nh = source.dst.h().order();
    let mut out = Vec::new();
    let mut eta = vec![0usize; ng];
    loop {
        let cand = XMod2Hom {
            source: source.clone(),
            target: target.clone(),
            eta_h: eta.clone(),
        };
        if cand.validate().all_passed() {
            out.push(cand);
        }
        let mut k = ng;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            eta[k] += 1;
            if eta[k] < nh {
                break;
            }
            eta[k] = 0;
        }
    }
}

/// Named instances used by tests, the CLI and the acceptance suite.
pub mod instances {
    use super::*;

    /// `(Aut ℤ₃, ℤ₃)`: `|G| = 2`, `|H| = 3`, trivial boundary (ℤ₃ is abelian).
    pub fn aut_z3() -> CrossedModule {
        xmod_from_aut(Arc::new(FiniteGroup::cyclic(3))).expect("Aut(Z3)")
    }

    /// `(Aut S₃, S₃)`: boundary is an isomorphism, `|G₁| = 36`.
    pub fn aut_s3() -> CrossedModule {
        xmod_from_aut(Arc::new(FiniteGroup::symmetric(3))).expect("Aut(S3)")
    }

    /// `ℤ₂` acting on `ℤ₃` by inversion, trivial boundary.
    pub fn z2_inverting_z3() -> CrossedModule {
        let action = vec![vec![0, 1, 2], vec![0, 2, 1]];
        xmod_from_module(
            Arc::new(FiniteGroup::cyclic(2)),
            Arc::new(FiniteGroup::cyclic(3)),
            action,
        )
        .expect("module")
    }

    /// Trivial group acting trivially on `ℤ₄`; `T` of it has a single object.
    pub fn z4_over_trivial() -> CrossedModule {
        xmod_from_module(
            Arc::new(FiniteGroup::trivial()),
            Arc::new(FiniteGroup::cyclic(4)),
            vec![vec![0, 1, 2, 3]],
        )
        .expect("module")
    }

    /// `ℤₙ → ℤₙ` with `∂ = id` and trivial action, so `s ≠ t` on `G₁ = ℤₙ × ℤₙ`.
    pub fn identity_cyclic(n: usize) -> CrossedModule {
        let z = Arc::new(FiniteGroup::cyclic(n));
        let action = vec![(0..n).collect::<Vec<_>>(); n];
        CrossedModule::new(z.clone(), z, action, (0..n).collect()).expect("identity crossed module")
    }

    /// `A₃ ↪ S₃` with conjugation: nontrivial boundary, `|G₁| = 18`.
    pub fn a3_in_s3() -> CrossedModule {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let mut a3 = s3.subgroup_generated(&[s3.elements().find(|&x| s3.element_order(x) == 3).expect("3-cycle")]);
        a3.sort();
        xmod_from_normal(s3, &a3).expect("A3 is normal")
    }

    pub fn trivial() -> CrossedModule {
        let e = Arc::new(FiniteGroup::trivial());
        CrossedModule::new(e.clone(), e, vec![vec![0]], vec![0]).expect("trivial")
    }

    /// A boundary for `x` that is not a homomorphism, used by mutation tests.
    pub fn corrupt_boundary(x: &CrossedModule) -> Option<CrossedModule> {
        let (g, h) = (x.g(), x.h());
        if g.order() < 2 || h.order() < 2 {
            return None;
        }
        let mut b = x.boundary_map().to_vec();
        let target = h.elements().find(|&a| a != h.identity())?;
        b[target] = g.elements().find(|&y| y != b[target])?;
        // Sending exactly one non-identity element elsewhere breaks multiplicativity
        // unless H = ℤ₂ and the new value happens to be a homomorphism.
        (check_hom(h, g, &b).is_err()).then(|| x.with_boundary(b).expect("shape preserved"))
    }
}
