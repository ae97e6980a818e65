//! Named batteries of laws, each run over a bounded family of polynomials.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{enumerate_monoids, verify_linear_bialgebra};
use crate::cores::{in_core, star_map, star_obj, verify_core_membership, Side};
use crate::duality::{
    canonical_dual, cyclic_pairs, phi, psi, search_duals, verify_dual_pair, verify_mix_eta_epsilon,
    verify_retract_section,
};
use crate::error::{PolyError, Result};
use crate::law::LawReport;
use crate::monoidal::{self, mor as m};
use crate::polycore::{
    checked_family, enumerate_homs, hom_count, polynomials_within, random_hom, CompareStats, FiniteSet, Mor, Obj,
    PolyMap, Polynomial,
};

pub const SUITES: &[&str] = &[
    "coherence",
    "naturality",
    "mix",
    "day",
    "bifunctoriality",
    "duality",
    "cores",
    "bialgebra",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub max_pos: usize,
    pub max_dir: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_pos: 2,
            max_dir: 2,
            seed: 0,
            samples: 32,
        }
    }
}

impl SuiteOptions {
    fn family(&self) -> Result<Vec<Polynomial>> {
        checked_family(self.max_pos, self.max_dir)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<LawReport> {
    let parts = match name {
        "coherence" => coherence(opts)?,
        "naturality" => naturality(opts)?,
        "mix" => mix(opts)?,
        "day" => day(opts)?,
        "bifunctoriality" => bifunctoriality(opts)?,
        "duality" => duality(opts)?,
        "cores" => cores(opts)?,
        "bialgebra" => bialgebra()?,
        other => {
            return Err(PolyError::InvalidInput(format!(
                "unknown suite `{other}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(LawReport::all(name, parts))
}

/// Folds per-instance reports into one per law. Stops at the first failing
/// instance, whose name becomes `failed`.
struct Battery {
    law: String,
    instances: u64,
    stats: CompareStats,
    failure: Option<LawReport>,
}

impl Battery {
    fn new(law: &str) -> Self {
        Battery {
            law: law.to_string(),
            instances: 0,
            stats: CompareStats::default(),
            failure: None,
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    fn add(&mut self, r: LawReport) {
        self.instances += 1;
        self.stats += r.stats;
        if !r.pass && self.failure.is_none() {
            self.failure = Some(r);
        }
    }

    fn check(&mut self, instance: String, lhs: &Mor, rhs: &Mor) -> Result<()> {
        if !self.done() {
            self.add(LawReport::check(&instance, lhs, rhs)?);
        }
        Ok(())
    }

    fn verdict(&mut self, instance: String, pass: bool) {
        if !self.done() {
            self.add(LawReport::verdict(&instance, pass, None));
        }
    }

    fn finish(self) -> LawReport {
        let note = Some(format!("{} instances", self.instances));
        match self.failure {
            None => LawReport {
                stats: self.stats,
                ..LawReport::verdict(&self.law, true, note)
            },
            Some(f) => LawReport {
                law: self.law,
                pass: false,
                failed: Some(f.law.clone()),
                counterexample: f.counterexample,
                stats: self.stats,
                note,
                parts: Vec::new(),
            },
        }
    }
}

fn b(p: &Polynomial) -> Obj {
    Obj::base(p.clone())
}

fn id(o: &Obj) -> Mor {
    Mor::id(o)
}

fn tuple(ps: &[&Polynomial]) -> String {
    let names: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("({})", names.join(", "))
}

fn coherence(opts: &SuiteOptions) -> Result<Vec<LawReport>> {
    let fam = opts.family()?;
    let y = Obj::y();
    let mut tp = Battery::new("⊗ pentagon");
    let mut sp = Battery::new("◁ pentagon");
    for p in &fam {
        for q in &fam {
            for r in &fam {
                for s in &fam {
                    let (p_, q_, r_, s_) = (b(p), b(q), b(r), b(s));
                    let name = tuple(&[p, q, r, s]);
                    let pq = Obj::tensor(&p_, &q_);
                    let rs = Obj::tensor(&r_, &s_);
                    let qr = Obj::tensor(&q_, &r_);
                    tp.check(
                        name.clone(),
                        &m::tensor_assoc(&pq, &r_, &s_).then(&m::tensor_assoc(&p_, &q_, &rs))?,
                        &Mor::chain(&[
                            Mor::tensor(&m::tensor_assoc(&p_, &q_, &r_), &id(&s_)),
                            m::tensor_assoc(&p_, &qr, &s_),
                            Mor::tensor(&id(&p_), &m::tensor_assoc(&q_, &r_, &s_)),
                        ])?,
                    )?;
                    if !sp.done() {
                        let pq = Obj::sub(&p_, &q_)?;
                        let rs = Obj::sub(&r_, &s_)?;
                        let qr = Obj::sub(&q_, &r_)?;
                        sp.check(
                            name,
                            &m::tri_assoc(&pq, &r_, &s_)?.then(&m::tri_assoc(&p_, &q_, &rs)?)?,
                            &Mor::chain(&[
                                Mor::sub(&m::tri_assoc(&p_, &q_, &r_)?, &id(&s_))?,
                                m::tri_assoc(&p_, &qr, &s_)?,
                                Mor::sub(&id(&p_), &m::tri_assoc(&q_, &r_, &s_)?)?,
                            ])?,
                        )?;
                    }
                }
            }
        }
    }
    let mut tt = Battery::new("⊗ triangle");
    let mut st = Battery::new("◁ triangle");
    let mut inv = Battery::new("⊗ symmetry involution");
    let mut hex = Battery::new("⊗ hexagon");
    let mut sq_r = Battery::new("symmetric square through ∂^R");
    let mut sq_l = Battery::new("symmetric square through ∂^L");
    for p in &fam {
        for q in &fam {
            let (p_, q_) = (b(p), b(q));
            let name = tuple(&[p, q]);
            tt.check(
                name.clone(),
                &m::tensor_assoc(&p_, &y, &q_).then(&Mor::tensor(&id(&p_), &m::tensor_unit_l(&q_)))?,
                &Mor::tensor(&m::tensor_unit_r(&p_), &id(&q_)),
            )?;
            st.check(
                name.clone(),
                &m::tri_assoc(&p_, &y, &q_)?.then(&Mor::sub(&id(&p_), &m::tri_unit_l(&q_)?)?)?,
                &Mor::sub(&m::tri_unit_r(&p_)?, &id(&q_))?,
            )?;
            inv.check(
                name.clone(),
                &m::tensor_sym(&p_, &q_).then(&m::tensor_sym(&q_, &p_))?,
                &id(&Obj::tensor(&p_, &q_)),
            )?;
            for r in &fam {
                let r_ = b(r);
                let name = tuple(&[p, q, r]);
                hex.check(
                    name.clone(),
                    &Mor::chain(&[
                        m::tensor_assoc(&p_, &q_, &r_),
                        m::tensor_sym(&p_, &Obj::tensor(&q_, &r_)),
                        m::tensor_assoc(&q_, &r_, &p_),
                    ])?,
                    &Mor::chain(&[
                        Mor::tensor(&m::tensor_sym(&p_, &q_), &id(&r_)),
                        m::tensor_assoc(&q_, &p_, &r_),
                        Mor::tensor(&id(&q_), &m::tensor_sym(&p_, &r_)),
                    ])?,
                )?;
                // (b ◁ c) ⊗ a with a = p, b = q, c = r.
                let bc = Obj::sub(&q_, &r_)?;
                sq_r.check(
                    name.clone(),
                    &Mor::chain(&[
                        m::tensor_sym(&bc, &p_),
                        m::perm_dist_lr(&p_, &q_, &r_)?,
                        Mor::sub(&id(&q_), &m::tensor_sym(&p_, &r_))?,
                    ])?,
                    &m::dist_r(&q_, &r_, &p_)?,
                )?;
                sq_l.check(
                    name,
                    &Mor::chain(&[
                        m::tensor_sym(&p_, &bc),
                        m::perm_dist_rl(&q_, &r_, &p_)?,
                        Mor::sub(&m::tensor_sym(&q_, &p_), &id(&r_))?,
                    ])?,
                    &m::dist_l(&p_, &q_, &r_)?,
                )?;
            }
        }
    }
    Ok([tp, sp, tt, st, inv, hex, sq_r, sq_l]
        .into_iter()
        .map(Battery::finish)
        .collect())
}

/// A random map between random members of the family.
fn sample_map(fam: &[Polynomial], rng: &mut ChaCha8Rng) -> PolyMap {
    loop {
        let p = fam.choose(rng).expect("family is nonempty");
        let q = fam.choose(rng).expect("family is nonempty");
        if let Some(f) = random_hom(p, q, rng) {
            return f;
        }
    }
}

/// Members with at least one position, each carrying a direction. Squares
/// built only from the full family are dominated by constants and the empty
/// polynomial, where no direction is ever compared.
fn directed(fam: &[Polynomial]) -> Vec<Polynomial> {
    let out: Vec<Polynomial> = fam
        .iter()
        .filter(|p| p.num_positions() > 0 && p.cards().iter().all(|&c| c > 0))
        .cloned()
        .collect();
    if out.is_empty() {
        fam.to_vec()
    } else {
        out
    }
}

fn maps_name(fs: &[&PolyMap]) -> String {
    let names: Vec<String> = fs.iter().map(|f| format!("{} -> {}", f.dom, f.cod)).collect();
    format!("[{}]", names.join("; "))
}

fn naturality(opts: &SuiteOptions) -> Result<Vec<LawReport>> {
    let fam = opts.family()?;
    let mut rng = opts.rng();
    let mut laws = Vec::new();
    type Square = fn(&[Mor]) -> Result<(Mor, Mor)>;
    let squares: [(&str, usize, Square); 10] = [
        ("duoidal", 4, |f| {
            let (p1, p2, q1, q2) = (f[0].dom(), f[1].dom(), f[2].dom(), f[3].dom());
            let (p1_, p2_, q1_, q2_) = (f[0].cod(), f[1].cod(), f[2].cod(), f[3].cod());
            Ok((
                Mor::tensor(&Mor::sub(&f[0], &f[1])?, &Mor::sub(&f[2], &f[3])?)
                    .then(&m::duoidal(p1_, p2_, q1_, q2_)?)?,
                m::duoidal(p1, p2, q1, q2)?.then(&Mor::sub(&Mor::tensor(&f[0], &f[2]), &Mor::tensor(&f[1], &f[3]))?)?,
            ))
        }),
        ("∂^L", 3, |f| {
            Ok((
                Mor::tensor(&f[0], &Mor::sub(&f[1], &f[2])?).then(&m::dist_l(f[0].cod(), f[1].cod(), f[2].cod())?)?,
                m::dist_l(f[0].dom(), f[1].dom(), f[2].dom())?.then(&Mor::sub(&Mor::tensor(&f[0], &f[1]), &f[2])?)?,
            ))
        }),
        ("∂^R", 3, |f| {
            Ok((
                Mor::tensor(&Mor::sub(&f[0], &f[1])?, &f[2]).then(&m::dist_r(f[0].cod(), f[1].cod(), f[2].cod())?)?,
                m::dist_r(f[0].dom(), f[1].dom(), f[2].dom())?.then(&Mor::sub(&f[0], &Mor::tensor(&f[1], &f[2]))?)?,
            ))
        }),
        ("permuting ∂^L_R", 3, |f| {
            Ok((
                Mor::tensor(&f[0], &Mor::sub(&f[1], &f[2])?).then(&m::perm_dist_lr(
                    f[0].cod(),
                    f[1].cod(),
                    f[2].cod(),
                )?)?,
                m::perm_dist_lr(f[0].dom(), f[1].dom(), f[2].dom())?
                    .then(&Mor::sub(&f[1], &Mor::tensor(&f[0], &f[2]))?)?,
            ))
        }),
        ("permuting ∂^R_L", 3, |f| {
            Ok((
                Mor::tensor(&Mor::sub(&f[0], &f[1])?, &f[2]).then(&m::perm_dist_rl(
                    f[0].cod(),
                    f[1].cod(),
                    f[2].cod(),
                )?)?,
                m::perm_dist_rl(f[0].dom(), f[1].dom(), f[2].dom())?
                    .then(&Mor::sub(&Mor::tensor(&f[0], &f[2]), &f[1])?)?,
            ))
        }),
        ("indep", 2, |f| {
            Ok((
                Mor::tensor(&f[0], &f[1]).then(&m::indep(f[0].cod(), f[1].cod())?)?,
                m::indep(f[0].dom(), f[1].dom())?.then(&Mor::sub(&f[0], &f[1])?)?,
            ))
        }),
        ("⊗ symmetry", 2, |f| {
            Ok((
                Mor::tensor(&f[0], &f[1]).then(&m::tensor_sym(f[0].cod(), f[1].cod()))?,
                m::tensor_sym(f[0].dom(), f[1].dom()).then(&Mor::tensor(&f[1], &f[0]))?,
            ))
        }),
        ("⊗ associator", 3, |f| {
            Ok((
                Mor::tensor(&Mor::tensor(&f[0], &f[1]), &f[2]).then(&m::tensor_assoc(
                    f[0].cod(),
                    f[1].cod(),
                    f[2].cod(),
                ))?,
                m::tensor_assoc(f[0].dom(), f[1].dom(), f[2].dom())
                    .then(&Mor::tensor(&f[0], &Mor::tensor(&f[1], &f[2])))?,
            ))
        }),
        ("◁ associator", 3, |f| {
            Ok((
                Mor::sub(&Mor::sub(&f[0], &f[1])?, &f[2])?.then(&m::tri_assoc(f[0].cod(), f[1].cod(), f[2].cod())?)?,
                m::tri_assoc(f[0].dom(), f[1].dom(), f[2].dom())?.then(&Mor::sub(&f[0], &Mor::sub(&f[1], &f[2])?)?)?,
            ))
        }),
        ("◁ unitors", 1, |f| {
            Ok((
                Mor::sub(&id(&Obj::y()), &f[0])?.then(&m::tri_unit_l(f[0].cod())?)?,
                m::tri_unit_l(f[0].dom())?.then(&f[0])?,
            ))
        }),
    ];
    let rich = directed(&fam);
    for (law, arity, square) in squares {
        let mut bat = Battery::new(&format!("naturality of {law}"));
        for k in 0..opts.samples {
            let pool = if k % 2 == 0 { &rich } else { &fam };
            let maps: Vec<PolyMap> = (0..arity).map(|_| sample_map(pool, &mut rng)).collect();
            let mors: Vec<Mor> = maps.iter().map(Mor::from_map).collect();
            let (lhs, rhs) = square(&mors)?;
            bat.check(maps_name(&maps.iter().collect::<Vec<_>>()), &lhs, &rhs)?;
        }
        laws.push(bat.finish());
    }
    Ok(laws)
}

fn mix(opts: &SuiteOptions) -> Result<Vec<LawReport>> {
    let fam = opts.family()?;
    let y = Obj::y();
    let mut via_r = Battery::new("mix coherence through ∂^R");
    let mut via_l = Battery::new("mix coherence through ∂^L");
    let mut cart = Battery::new("indep is cartesian");
    let mut perm = Battery::new("permuting distributor against indep");
    let mut core = Battery::new("distributors are isos on core legs");
    for p in &fam {
        for q in &fam {
            let (p_, q_) = (b(p), b(q));
            let name = tuple(&[p, q]);
            let indep = m::indep(&p_, &q_)?;
            via_r.check(name.clone(), &indep, &m::indep_via_dist_r(&p_, &q_)?)?;
            via_l.check(name.clone(), &indep, &m::indep_via_dist_l(&p_, &q_)?)?;
            cart.verdict(name.clone(), monoidal::indep(p, q)?.is_cartesian());
            perm.check(
                name,
                &Mor::chain(&[
                    m::perm_dist_lr(&p_, &y, &q_)?,
                    m::tri_unit_l(&Obj::tensor(&p_, &q_))?,
                    indep,
                ])?,
                &m::dist_l(&p_, &y, &q_)?.then(&Mor::sub(&m::tensor_unit_r(&p_), &id(&q_))?)?,
            )?;
        }
    }
    // ∂^L with a linear left leg and ∂^R with a representable right leg.
    for a in &fam {
        for b_ in &fam {
            for c in &fam {
                if a.is_linear() {
                    core.verdict(
                        format!("∂^L {}", tuple(&[a, b_, c])),
                        monoidal::dist_l(a, b_, c)?.is_iso(),
                    );
                }
                if a.is_representable() {
                    core.verdict(
                        format!("∂^R {}", tuple(&[b_, c, a])),
                        monoidal::dist_r(b_, c, a)?.is_iso(),
                    );
                }
            }
        }
    }
    let k = LawReport::check_identity("normality k = id", &m::normality_k()?)?;
    let mm = LawReport::verdict("mix map is the identity", monoidal::mix_map().is_identity(), None);
    Ok(vec![
        via_r.finish(),
        via_l.finish(),
        cart.finish(),
        perm.finish(),
        core.finish(),
        k,
        mm,
    ])
}

/// `p(A)` elements as `(P, α)` with `α: p[P] → A`.
fn elements(p: &Polynomial, a: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for (pos, &c) in p.cards().iter().enumerate() {
        let mut alpha = vec![0usize; c];
        loop {
            out.push((pos, alpha.clone()));
            let mut k = c;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                alpha[k] += 1;
                if alpha[k] < a {
                    break;
                }
                alpha[k] = 0;
            }
            if alpha.iter().all(|&x| x == 0) || a == 0 {
                break;
            }
        }
        if c > 0 && a == 0 {
            out.pop();
        }
    }
    out
}

/// The Day map `p(A) × q(B) → (p ⊗ q)(A × B)`.
fn day_map(q: &Polynomial, bsize: usize, x: &(usize, Vec<usize>), z: &(usize, Vec<usize>)) -> (usize, Vec<usize>) {
    let k = x.0 * q.num_positions() + z.0;
    let f =
        x.1.iter()
            .flat_map(|&a| z.1.iter().map(move |&b| a * bsize + b))
            .collect();
    (k, f)
}

/// The action of `f: s → r` on `s(X) → r(X)`.
fn act(f: &PolyMap, x: &(usize, Vec<usize>)) -> (usize, Vec<usize>) {
    let back = &f.on_directions[x.0];
    (f.on_positions[x.0], back.iter().map(|&d| x.1[d]).collect())
}

fn day(opts: &SuiteOptions) -> Result<Vec<LawReport>> {
    const ENUMERATE_LIMIT: u128 = 10_000;
    let fam = opts.family()?;
    let mut rng = opts.rng();
    let mut count = Battery::new("Day: hom count equals the product of r(p[P] × q[Q])");
    let mut bij = Battery::new("Day: maps out of p ⊗ q correspond to generic elements");
    let mut uniq = Battery::new("Day: every factorization is determined by generic elements");
    for p in &fam {
        for q in &fam {
            let pq = monoidal::tensor(p, q)?;
            for r in &fam {
                let name = tuple(&[p, q, r]);
                let homs = hom_count(&pq, r)?;
                let mut expected = 1u128;
                for &c in p.cards() {
                    for &d in q.cards() {
                        expected *= r.eval_count((c * d) as u128)?;
                    }
                }
                count.verdict(name.clone(), homs == expected);
                if homs <= ENUMERATE_LIMIT {
                    let mut seen = HashSet::new();
                    for f in enumerate_homs(&pq, r)? {
                        // Generic element at (P, Q): the identity of p[P] × q[Q] pushed through f.
                        let generic: Vec<(usize, Vec<usize>)> = (0..pq.num_positions())
                            .map(|k| act(&f, &(k, (0..pq.card(k)).collect())))
                            .collect();
                        seen.insert(generic);
                    }
                    bij.verdict(name.clone(), seen.len() as u128 == homs && homs == expected);
                }
                let maps: Vec<PolyMap> = (0..opts.samples.min(8))
                    .filter_map(|_| random_hom(&pq, r, &mut rng))
                    .collect();
                let mut ok = true;
                for f in &maps {
                    for asize in 1..=2 {
                        for bsize in 1..=2 {
                            for x in elements(p, asize) {
                                for z in elements(q, bsize) {
                                    let direct = act(f, &day_map(q, bsize, &x, &z));
                                    let k = x.0 * q.num_positions() + z.0;
                                    let qq = q.card(z.0);
                                    let (rpos, g) = act(f, &(k, (0..pq.card(k)).collect()));
                                    let moved: Vec<usize> =
                                        g.iter().map(|&d| x.1[d / qq] * bsize + z.1[d % qq]).collect();
                                    ok &= direct == (rpos, moved);
                                }
                            }
                        }
                    }
                }
                uniq.verdict(name, ok);
            }
        }
    }
    Ok(vec![count.finish(), bij.finish(), uniq.finish()])
}

fn bifunctoriality(opts: &SuiteOptions) -> Result<Vec<LawReport>> {
    let fam = opts.family()?;
    let mut ids = Battery::new("products preserve identities");
    for p in &fam {
        for q in &fam {
            let (ip, iq) = (PolyMap::identity(p), PolyMap::identity(q));
            let ok = monoidal::tensor_map(&ip, &iq)?.is_identity() && monoidal::substitute_map(&ip, &iq)?.is_identity();
            ids.verdict(tuple(&[p, q]), ok);
        }
    }
    // Every composable pair on the small family, in both slots.
    let small = polynomials_within(opts.max_pos.min(2), opts.max_dir.min(1));
    let mut pairs = Vec::new();
    for p in &small {
        for q in &small {
            for r in &small {
                for f in enumerate_homs(p, q)? {
                    for g in enumerate_homs(q, r)? {
                        pairs.push((f.clone(), g));
                    }
                }
            }
        }
    }
    let mut comp = Battery::new("products preserve composition");
    for (f, g) in &pairs {
        for (f2, g2) in &pairs {
            if comp.done() {
                break;
            }
            let fg = f.then(g)?;
            let fg2 = f2.then(g2)?;
            let ok = monoidal::tensor_map(&fg, &fg2)?
                == monoidal::tensor_map(f, f2)?.then(&monoidal::tensor_map(g, g2)?)?
                && monoidal::substitute_map(&fg, &fg2)?
                    == monoidal::substitute_map(f, f2)?.then(&monoidal::substitute_map(g, g2)?)?;
            comp.verdict(maps_name(&[f, g, f2, g2]), ok);
        }
    }
    Ok(vec![ids.finish(), comp.finish()])
}

fn duality(opts: &SuiteOptions) -> Result<Vec<LawReport>> {
    let mut canon = Vec::new();
    for n in 0..=4 {
        let w = canonical_dual(&FiniteSet::new(n))?;
        canon.push(LawReport::all(
            &format!("canonical duality of {}", w.left),
            vec![
                verify_dual_pair(&w)?,
                verify_mix_eta_epsilon(&w)?,
                verify_retract_section(&w)?,
            ],
        ));
    }
    let mut shapes = Battery::new("Φ identity iff representable, Ψ iso iff linear");
    for p in opts.family()? {
        let g = psi(&p)?;
        let ok = phi(&p)?.is_identity() == p.is_representable() && (g.cod == p && g.is_iso()) == p.is_linear();
        shapes.verdict(p.to_string(), ok);
    }
    let found = search_duals(opts.max_pos, opts.max_dir)?;
    let legs: Vec<(Polynomial, Polynomial)> = found.iter().map(|d| (d.left.clone(), d.right.clone())).collect();
    let top = opts.max_pos.min(opts.max_dir);
    let predicted: Vec<(Polynomial, Polynomial)> = (0..=top)
        .map(|n| (Polynomial::linear(n), Polynomial::representable(n)))
        .collect();
    let search = LawReport::verdict(
        "dual search finds exactly Ay ⊣⊣ y^A",
        legs == predicted && cyclic_pairs(&found) == vec![(Polynomial::y(), Polynomial::y())],
        Some(format!("{} pairs", legs.len())),
    );
    Ok(vec![
        LawReport::all("canonical dualities", canon),
        shapes.finish(),
        search,
    ])
}

fn cores(opts: &SuiteOptions) -> Result<Vec<LawReport>> {
    let mut agree = Battery::new("probing agrees with the core shape tests");
    for p in opts.family()? {
        for side in [Side::Left, Side::Right] {
            let r = verify_core_membership(&p, side, opts.max_pos, opts.max_dir)?;
            agree.verdict(format!("{p} {side}"), r.pass == in_core(&p, side));
        }
    }
    let mut star = Battery::new("star is contravariant and preserves hom counts");
    let reps: Vec<Polynomial> = (0..=3).map(Polynomial::representable).collect();
    for a in &reps {
        for c in &reps {
            let counts = hom_count(a, c)? == hom_count(&star_obj(c)?, &star_obj(a)?)?;
            let mut ok = counts;
            for b_ in &reps {
                for f in enumerate_homs(a, b_)? {
                    for g in enumerate_homs(b_, c)? {
                        ok &= star_map(&f.then(&g)?)? == star_map(&g)?.then(&star_map(&f)?)?;
                    }
                }
            }
            star.verdict(tuple(&[a, c]), ok);
        }
    }
    Ok(vec![agree.finish(), star.finish()])
}

fn bialgebra() -> Result<Vec<LawReport>> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        let mut bat = Battery::new(&format!("{side} linear bialgebras of monoids of order ≤ 3"));
        for n in 1..=3 {
            for mon in enumerate_monoids(n)? {
                if !bat.done() {
                    let mut r = verify_linear_bialgebra(&mon, side)?;
                    r.law = format!("{:?}", mon.table());
                    bat.add(r);
                }
            }
        }
        out.push(bat.finish());
    }
    Ok(out)
}
