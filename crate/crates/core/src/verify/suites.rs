//! The identity checks behind each suite.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Collector, Params, Suite, VerifyConfig};
use crate::color::Color;
use crate::coloring::{
    check_recursion_3c, f_one_terms, f_pi_shift_check, f_shift_law_residual, functional_sum_3c,
    partial_partition_accumulated, phi_ratio_relation_check, psi_law_residual,
    shift_relation_residuals, ColoredVertexKind, PhiRatioForm, PsiConvention, Recursion3c,
    WeightFamily3c,
};
use crate::error::Result;
use crate::numeric::residual;
use crate::rng;
use crate::sixvertex::{
    check_recursion_6v, functional_sum_6v, functional_sum_6v_signed,
    partition_function_6v_accumulated, trig_cubic_residual, Recursion6v,
};
use crate::spectral::{parity, Side, Sign, SpectralAssignment};
use crate::theta::{
    cubic_factor_d, quasi_period_factor, theta1, theta4, zeta, zeta_theta1, EllipticParams,
    SeriesConfig,
};
use crate::ybe::{
    explicit_gauge_factor, family_residual, gauge_transform, half_period_substitution,
    half_period_substitution_residual, theta1_match, ybe_residual, BetaGaugeReading, GaugeData,
    HalfPeriodFamily, SixVertexTrig, Theta1Family, ThreeColoringFamily, YbeForm, YbeResult,
};

const I: Complex64 = Complex64::new(0.0, 1.0);

pub(super) fn run(
    suite: Suite,
    seed: u64,
    draws: usize,
    cfg: &VerifyConfig,
    out: &mut Collector,
) -> Result<()> {
    let series = cfg.series()?;
    let mut g = rng::labelled(seed, suite.name());
    for d in 0..draws {
        let ctx = Draw {
            d,
            cfg,
            series: &series,
        };
        match suite {
            Suite::Theta => theta_draw(&ctx, &mut g, out)?,
            Suite::Ybe => ybe_draw(&ctx, &mut g, out)?,
            Suite::Recursion6v => recursion6v_draw(&ctx, &mut g, out)?,
            Suite::Functional6v => functional6v_draw(&ctx, &mut g, out)?,
            Suite::Recursion3c => recursion3c_draw(&ctx, &mut g, out)?,
            Suite::Functional3c => functional3c_draw(&ctx, &mut g, out)?,
            Suite::Appendix => appendix_draw(&ctx, &mut g, out)?,
            Suite::All => unreachable!("expanded by the caller"),
        }
    }
    Ok(())
}

struct Draw<'a> {
    d: usize,
    cfg: &'a VerifyConfig,
    series: &'a SeriesConfig,
}

impl Draw<'_> {
    fn lattice_params(&self, g: &mut ChaCha8Rng) -> Result<(EllipticParams, Params)> {
        let p = g.gen_range(self.cfg.nome_min..=self.cfg.nome_max);
        let lambda = g.gen_range(self.cfg.lambda_min..=self.cfg.lambda_max);
        let params = EllipticParams::real(p, lambda)?;
        Ok((
            params,
            Params::new()
                .with("draw", self.d)
                .with("p", p)
                .with("lambda", lambda),
        ))
    }

    fn spectral(&self, g: &mut ChaCha8Rng, n: usize) -> (Vec<f64>, Vec<f64>) {
        let chi = rng::uniform_vec(g, n, self.cfg.spectral_min, self.cfg.spectral_max);
        let psi = rng::uniform_vec(g, n, self.cfg.spectral_min, self.cfg.spectral_max);
        (chi, psi)
    }
}

fn spectral_params(base: &Params, a: &SpectralAssignment) -> Params {
    base.with("n", a.n())
        .with("chi", a.chi.clone())
        .with("psi", a.psi.clone())
        .with("eta", a.eta)
}

fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Chi => "chi",
        Side::Psi => "psi",
    }
}

fn theta_draw(ctx: &Draw, g: &mut ChaCha8Rng, out: &mut Collector) -> Result<()> {
    let cfg = ctx.cfg;
    let p = g.gen_range(cfg.theta_nome_min..=cfg.theta_nome_max);
    let lambda = g.gen_range(cfg.lambda_min..=cfg.lambda_max);
    let phi = Complex64::new(g.gen_range(-PI..PI), g.gen_range(-0.3..0.3));
    let x = g.gen_range(-PI..PI);
    let params = EllipticParams::real(p, lambda)?;
    let s = ctx.series;
    let t1 = |z: Complex64| theta1(z, &params, s);
    let t4 = |z: Complex64| theta4(z, &params, s);
    let base = Params::new().with("draw", ctx.d).with("p", p);
    let at_phi = base.with("phi_re", phi.re).with("phi_im", phi.im);
    let tol = cfg.tol_theta;
    out.check("theta1_odd", &at_phi, tol, || {
        Ok(residual(t1(-phi)?, -t1(phi)?, 0.0))
    });
    out.check("theta4_even", &at_phi, tol, || {
        Ok(residual(t4(-phi)?, t4(phi)?, 0.0))
    });
    out.check("theta1_pi_shift", &at_phi, tol, || {
        Ok(residual(t1(phi + PI)?, -t1(phi)?, 0.0))
    });
    out.check("theta4_pi_shift", &at_phi, tol, || {
        Ok(residual(t4(phi + PI)?, t4(phi)?, 0.0))
    });
    out.check("theta1_quasi_period", &at_phi, tol, || {
        let period = params.quasi_period()?;
        Ok(residual(
            t1(phi + period)?,
            quasi_period_factor(phi, &params)? * t1(phi)?,
            0.0,
        ))
    });
    out.check("theta4_quasi_period", &at_phi, tol, || {
        let period = params.quasi_period()?;
        Ok(residual(
            t4(phi + period)?,
            quasi_period_factor(phi, &params)? * t4(phi)?,
            0.0,
        ))
    });
    out.check("theta4_half_period", &at_phi, tol, || {
        let half = params.quasi_period()? / 2.0;
        let rhs = I * params.nome_quarter() * (-I * phi).exp() * t1(phi - half)?;
        Ok(residual(t4(phi)?, rhs, 0.0))
    });
    out.check("theta_cubic", &base.with("phi", x), tol, || {
        let z = Complex64::new(x, 0.0);
        let lhs = t1(z)? * t1(z + PI / 3.0)? * t1(z + 2.0 * PI / 3.0)?;
        let rhs = cubic_factor_d(&params, s)? * theta1(3.0 * z, &params.cubed(), s)?;
        Ok(residual(lhs, rhs, 0.0))
    });
    out.check("zeta_product", &base.with("lambda", lambda), tol, || {
        let mut prod = Complex64::new(1.0, 0.0);
        for r in Color::ALL {
            prod *= zeta(r, &params, s)?;
        }
        Ok(residual(prod, Complex64::new(1.0, 0.0), 0.0))
    });
    Ok(())
}

fn ybe_draw(ctx: &Draw, g: &mut ChaCha8Rng, out: &mut Collector) -> Result<()> {
    let (params, base) = ctx.lattice_params(g)?;
    let phi = g.gen_range(-1.5..1.5);
    let phi_p = g.gen_range(-1.5..1.5);
    let eta = g.gen_range(ctx.cfg.eta_min..=ctx.cfg.eta_max);
    let s = ctx.series;
    let at = base.with("phi", phi).with("phi_p", phi_p);
    let tol = ctx.cfg.tol_ybe;
    let mut judge = |name: &str, params: &Params, res: Result<YbeResult>| {
        if let Ok(y) = &res {
            out.skipped += y.skipped;
        }
        out.check(name, params, tol, || res.map(|y| y.residual));
    };
    judge(
        "ybe_raw",
        &at,
        ThreeColoringFamily::new(WeightFamily3c::Raw, &params, s)
            .and_then(|f| ybe_residual(&f, phi, phi_p)),
    );
    judge(
        "ybe_tilde",
        &at,
        ThreeColoringFamily::new(WeightFamily3c::Tilde, &params, s)
            .and_then(|f| ybe_residual(&f, phi, phi_p)),
    );
    judge(
        "ybe_half_period",
        &at,
        HalfPeriodFamily::new(&params, s).and_then(|f| ybe_residual(&f, phi, phi_p)),
    );
    judge(
        "ybe_substituted",
        &at,
        half_period_substitution(&params, s).and_then(|f| ybe_residual(&f, phi, phi_p)),
    );
    judge(
        "ybe_theta1",
        &at,
        ybe_residual(&Theta1Family::new(&params, s), phi, phi_p),
    );
    judge(
        "ybe_sixvertex",
        &at.with("eta", eta),
        ybe_residual(&SixVertexTrig { eta }, phi, phi_p),
    );
    let gauged = ThreeColoringFamily::new(WeightFamily3c::Raw, &params, s)
        .and_then(|raw| Ok(gauge_transform(raw, GaugeData::reducing(&params, s)?)));
    judge(
        "ybe_gauged",
        &at,
        gauged.clone().and_then(|f| ybe_residual(&f, phi, phi_p)),
    );
    out.check("gauge_raw_to_tilde", &at, ctx.cfg.tol_constraint, || {
        let tilde = ThreeColoringFamily::new(WeightFamily3c::Tilde, &params, s)?;
        family_residual(&gauged?, &tilde, phi)
    });
    if let Ok(y) = ybe_residual(&Theta1Family::with_beta_sign(&params, s, -1.0), phi, phi_p) {
        out.observe_max("ybe_theta1_beta_flipped_max_residual", y.residual);
    }
    Ok(())
}

fn recursion6v_draw(ctx: &Draw, g: &mut ChaCha8Rng, out: &mut Collector) -> Result<()> {
    let n_max = ctx.cfg.max_n_sixvertex;
    let (chi, psi) = ctx.spectral(g, n_max);
    let eta = g.gen_range(ctx.cfg.eta_min..=ctx.cfg.eta_max);
    let x = g.gen_range(-PI..PI);
    let base = Params::new().with("draw", ctx.d);
    out.check(
        "trig_cubic",
        &base.with("phi", x),
        ctx.cfg.tol_theta,
        || Ok(trig_cubic_residual(x)),
    );
    for n in 1..=n_max {
        let generic = SpectralAssignment::new(chi[..n].to_vec(), psi[..n].to_vec(), eta)?;
        let comb = SpectralAssignment::combinatorial(chi[..n].to_vec(), psi[..n].to_vec())?;
        for k in 0..n {
            for l in 0..n {
                for sign in Sign::BOTH {
                    let z_name = if sign == Sign::Plus {
                        "recursion6v_plus"
                    } else {
                        "recursion6v_minus"
                    };
                    let here = |a: &SpectralAssignment| {
                        spectral_params(&base, a)
                            .with("k", k)
                            .with("l", l)
                            .with("sign", sign_name(sign))
                    };
                    out.check(z_name, &here(&generic), ctx.cfg.tol_recursion, || {
                        Ok(check_recursion_6v(&generic, k, l, sign, Recursion6v::Z)?.residual)
                    });
                    let f = check_recursion_6v(&comb, k, l, sign, Recursion6v::F);
                    if let (Ok(c), true) = (&f, (k + l) % 2 == 1) {
                        if let Some(r) = c.residual_without_index_sign() {
                            out.observe_min("recursion6v_f_unsigned_odd_k_plus_l_min_residual", r);
                        }
                    }
                    out.check("recursion6v_f", &here(&comb), ctx.cfg.tol_recursion, || {
                        Ok(f?.residual)
                    });
                }
            }
        }
    }
    Ok(())
}

fn functional6v_draw(ctx: &Draw, g: &mut ChaCha8Rng, out: &mut Collector) -> Result<()> {
    let n_max = ctx.cfg.max_n_sixvertex;
    let (chi, psi) = ctx.spectral(g, n_max);
    let eta = g.gen_range(ctx.cfg.eta_min..=ctx.cfg.eta_max);
    let base = Params::new().with("draw", ctx.d);
    for n in 1..=n_max {
        let comb = SpectralAssignment::combinatorial(chi[..n].to_vec(), psi[..n].to_vec())?;
        for k in 0..n {
            for side in [Side::Chi, Side::Psi] {
                let name = if side == Side::Chi {
                    "functional6v_chi"
                } else {
                    "functional6v_psi"
                };
                let at = spectral_params(&base, &comb).with("k", k);
                out.check(name, &at, ctx.cfg.tol_functional6v, || {
                    Ok(functional_sum_6v(&comb, k, side)?.residual)
                });
            }
            if let Ok(s) = functional_sum_6v_signed(&comb, k, Side::Psi, Sign::Plus) {
                out.observe_max("functional6v_psi_plus_sign_max_residual", s.residual);
            }
        }
        let generic = SpectralAssignment::new(chi[..n].to_vec(), psi[..n].to_vec(), eta)?;
        for i in 0..n {
            for side in [Side::Chi, Side::Psi] {
                let at = spectral_params(&base, &generic)
                    .with("i", i)
                    .with("side", side_name(side));
                out.check("parity6v", &at, ctx.cfg.tol_parity, || {
                    let z = partition_function_6v_accumulated(&generic)?;
                    let shifted = partition_function_6v_accumulated(&generic.shifted(side, i, PI))?;
                    Ok(residual(
                        shifted.sum,
                        parity(n - 1) * z.sum,
                        z.max_term.max(shifted.max_term),
                    ))
                });
            }
        }
    }
    Ok(())
}

fn recursion3c_draw(ctx: &Draw, g: &mut ChaCha8Rng, out: &mut Collector) -> Result<()> {
    let n_max = ctx.cfg.max_n_coloring;
    let (params, base) = ctx.lattice_params(g)?;
    let (chi, psi) = ctx.spectral(g, n_max);
    let s = ctx.series;
    for n in 1..=n_max {
        let a = SpectralAssignment::combinatorial(chi[..n].to_vec(), psi[..n].to_vec())?;
        for r in Color::ALL {
            for k in 0..n {
                for l in 0..n {
                    for sign in Sign::BOTH {
                        for form in [Recursion3c::Z, Recursion3c::F] {
                            let name = match (form, sign) {
                                (Recursion3c::Z, Sign::Plus) => "recursion3c_plus",
                                (Recursion3c::Z, Sign::Minus) => "recursion3c_minus",
                                (Recursion3c::F, Sign::Plus) => "recursion3c_f_plus",
                                (Recursion3c::F, Sign::Minus) => "recursion3c_f_minus",
                            };
                            let at = spectral_params(&base, &a)
                                .with("r", r.value())
                                .with("k", k)
                                .with("l", l);
                            let c = check_recursion_3c(r, k, l, sign, form, &a, &params, s);
                            if let (Ok(c), true) = (&c, (k + l) % 2 == 1) {
                                if let Some(x) = c.residual_without_index_sign() {
                                    out.observe_min(
                                        "recursion3c_f_unsigned_odd_k_plus_l_min_residual",
                                        x,
                                    );
                                }
                            }
                            out.check(name, &at, ctx.cfg.tol_recursion, || Ok(c?.residual));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn functional3c_draw(ctx: &Draw, g: &mut ChaCha8Rng, out: &mut Collector) -> Result<()> {
    let cfg = ctx.cfg;
    let n_max = cfg.max_n_coloring;
    let (params, base) = ctx.lattice_params(g)?;
    let (chi, psi) = ctx.spectral(g, n_max);
    let s = ctx.series;
    let small = EllipticParams::real(cfg.degeneration_nome, params.lambda().re)?;
    for n in 1..=n_max {
        let a = SpectralAssignment::combinatorial(chi[..n].to_vec(), psi[..n].to_vec())?;
        let at = spectral_params(&base, &a);
        for r in Color::ALL {
            let at_r = at.with("r", r.value());
            for k in 0..n {
                for side in [Side::Chi, Side::Psi] {
                    let name = if side == Side::Chi {
                        "functional3c_chi"
                    } else {
                        "functional3c_psi"
                    };
                    out.check(name, &at_r.with("k", k), cfg.tol_functional3c, || {
                        Ok(functional_sum_3c(r, k, side, &a, &params, s)?.residual)
                    });
                }
            }
            out.check(
                "degeneration",
                &at_r.with("p", cfg.degeneration_nome),
                cfg.tol_degeneration,
                || {
                    let z = partial_partition_accumulated(r, &a, WeightFamily3c::Tilde, &small, s)?;
                    let six = partition_function_6v_accumulated(&a)?;
                    Ok(residual(z.sum, six.sum, z.max_term.max(six.max_term)))
                },
            );
            for i in 0..n {
                out.check("pi_shift", &at_r.with("i", i), cfg.tol_identity3c, || {
                    let c = f_pi_shift_check(r, &a, i, &params, s)?;
                    let expected = Complex64::new(parity(n), 0.0);
                    Ok(c.summand_spread.max(c.total_residual).max(residual(
                        c.common_factor,
                        expected,
                        0.0,
                    )))
                });
            }
            out.check("phi_ratio", &at_r, cfg.tol_identity3c, || {
                phi_ratio_relation_check(r, &a, PhiRatioForm::Split, &params, s)
            });
            if let Ok(x) = phi_ratio_relation_check(r, &a, PhiRatioForm::Printed, &params, s) {
                out.observe_max(&format!("phi_ratio_printed_max_residual_n{n}"), x);
            }
            out.check("f_lambda_shift", &at_r, cfg.tol_identity3c, || {
                f_shift_law_residual(r, &a, &params, s)
            });
            if n >= 2 {
                out.check("partial_symmetry", &at_r, cfg.tol_identity3c, || {
                    let mut b = a.clone();
                    b.chi.reverse();
                    b.psi.rotate_left(1);
                    let za =
                        partial_partition_accumulated(r, &a, WeightFamily3c::Tilde, &params, s)?;
                    let zb =
                        partial_partition_accumulated(r, &b, WeightFamily3c::Tilde, &params, s)?;
                    Ok(residual(za.sum, zb.sum, za.max_term.max(zb.max_term)))
                });
            }
        }
        if n == 1 {
            out.check("f_one_terms", &at, cfg.tol_functional3c, || {
                let sum = functional_sum_3c(Color::ZERO, 0, Side::Chi, &a, &params, s)?;
                let terms = f_one_terms(a.spectral(0, 0), &params, s)?;
                Ok(sum
                    .terms
                    .iter()
                    .zip(terms)
                    .map(|(x, y)| residual(*x, y, 0.0))
                    .fold(0.0, f64::max))
            });
        }
    }
    let phi = Complex64::new(chi[0] - psi[0], 0.0);
    out.check(
        "psi_law",
        &base.with("phi", phi.re),
        cfg.tol_identity3c,
        || {
            let mut worst = 0.0f64;
            for v in ColoredVertexKind::all() {
                worst = worst.max(psi_law_residual(v, phi, &params, s, PsiConvention::Lifted)?);
            }
            Ok(worst)
        },
    );
    let mut printed = 0.0f64;
    for v in ColoredVertexKind::all() {
        if let Ok(x) = psi_law_residual(v, phi, &params, s, PsiConvention::Printed) {
            printed = printed.max(x);
        }
    }
    out.observe_min("psi_law_printed_min_residual", printed);
    let shifts = shift_relation_residuals(phi.re, &params, s);
    if let Ok(sh) = &shifts {
        out.observe_min(
            "lambda_color_shift_alpha_reading_min_residual",
            sh.beta_against_alpha,
        );
    }
    out.check(
        "lambda_color_shift",
        &base.with("phi", phi.re),
        cfg.tol_identity3c,
        || {
            let sh = shifts?;
            Ok([
                sh.alpha, sh.alpha_p, sh.beta, sh.beta_p, sh.gamma, sh.gamma_p,
            ]
            .into_iter()
            .fold(0.0, f64::max))
        },
    );
    Ok(())
}

fn appendix_draw(ctx: &Draw, g: &mut ChaCha8Rng, out: &mut Collector) -> Result<()> {
    let cfg = ctx.cfg;
    let (params, base) = ctx.lattice_params(g)?;
    let phi = g.gen_range(-1.5..1.5);
    let phi_p = g.gen_range(-1.5..1.5);
    let s = ctx.series;
    let at = base.with("phi", phi);
    out.check("half_period_substitution", &at, cfg.tol_appendix, || {
        half_period_substitution_residual(phi, &params, s)
    });
    out.check(
        "half_period_zeta_product",
        &base,
        cfg.tol_constraint,
        || {
            let mut prod = Complex64::new(1.0, 0.0);
            for r in Color::ALL {
                prod *= zeta_theta1(r, &params, s)?;
            }
            Ok(residual(prod, Complex64::new(1.0, 0.0), 0.0))
        },
    );
    let m = theta1_match(phi, &params, s);
    out.check("theta1_match_literal", &at, cfg.tol_appendix, || {
        Ok(m.clone()?.literal)
    });
    out.check("theta1_match_non_beta", &at, cfg.tol_appendix, || {
        Ok(m.clone()?.non_beta)
    });
    out.check("theta1_match_beta_sign_free", &at, cfg.tol_appendix, || {
        Ok(m.clone()?.beta_sign_free)
    });
    out.check(
        "theta1_match_beta_sign_product",
        &at,
        cfg.tol_appendix,
        || {
            Ok(residual(
                m.clone()?.beta_sign_product,
                Complex64::new(-1.0, 0.0),
                0.0,
            ))
        },
    );
    let pair = at.with("phi_p", phi_p);
    let reducing = GaugeData::reducing(&params, s);
    let theta1_reducing = GaugeData::theta1_reducing(&params, s);
    out.check("constraint_reducing", &pair, cfg.tol_constraint, || {
        Ok(reducing
            .clone()?
            .constraint_residual(YbeForm::Shifted(PI / 3.0), phi, phi_p))
    });
    out.check(
        "constraint_theta1_reducing",
        &pair,
        cfg.tol_constraint,
        || {
            Ok(theta1_reducing
                .clone()?
                .constraint_residual(YbeForm::Difference, phi, phi_p))
        },
    );
    let z = Complex64::new(phi, 0.0);
    out.check("gauge_explicit", &at, cfg.tol_constraint, || {
        let mut worst = 0.0f64;
        for gauge in [reducing.clone()?, theta1_reducing.clone()?] {
            for v in ColoredVertexKind::all() {
                let e = explicit_gauge_factor(&gauge, v, z, BetaGaugeReading::Consistent);
                worst = worst.max(residual(e, gauge.factor(v, z), 0.0));
            }
        }
        Ok(worst)
    });
    if let Ok(gauge) = &theta1_reducing {
        let printed = ColoredVertexKind::all()
            .filter(|v| v.kind == crate::sixvertex::VertexKind::Beta)
            .map(|v| {
                residual(
                    explicit_gauge_factor(gauge, v, z, BetaGaugeReading::Printed),
                    gauge.factor(v, z),
                    0.0,
                )
            })
            .fold(0.0, f64::max);
        out.observe_min("gauge_explicit_printed_beta_min_residual", printed);
    }
    Ok(())
}
