//! Every identifier a checker can put in a report, with a one-line statement.

pub const AXIOMS: &[(&str, &str)] = &[
    ("eq1", "α(ab) = α(a)α(b)"),
    ("eq2", "α(a)(bc) = (ab)α(c)"),
    ("eq3", "(ψ ⊗ ψ)Δ = Δψ"),
    ("eq4", "(Δ ⊗ ψ)Δ = (ψ ⊗ Δ)Δ"),
    (
        "eq5",
        "Σ b(1)(1) ⊗ b(1)(2) ⊗ ψ(b(2)) = Σ ψ(b(1)) ⊗ b(2)(1) ⊗ b(2)(2), on structure constants",
    ),
    ("alpha_psi", "αψ = ψα"),
    ("eq6", "Δ(bb') = Δ(b)Δ(b')"),
    ("eq7", "Δ(α(b)) = (α ⊗ α)Δ(b)"),
    ("eq7111", "Δ(ψ(b)) = (ψ ⊗ ψ)Δ(b)"),
    ("eq7112", "ψ(bb') = ψ(b)ψ(b')"),
    ("morphism.alpha", "α_B f = f α_A"),
    ("morphism.mul", "f(aa') = f(a)f(a')"),
    ("morphism.psi", "ψ_D g = g ψ_C"),
    ("morphism.comul", "(g ⊗ g)Δ_C = Δ_D g"),
    ("hom_semigroup", "α(x)(yz) = (xy)α(z) in a hom-semigroup"),
    ("multiplicative", "α(xy) = α(x)α(y) in a hom-semigroup"),
    ("eq8", "α_M(a·m) = α_A(a)·α_M(m)"),
    ("eq9", "α_A(a)·(b·m) = (ab)·α_M(m)"),
    ("comodul1", "(ψ_C ⊗ ψ_M)λ = λψ_M"),
    ("comodul2", "(Δ_C ⊗ ψ_M)λ = (ψ_C ⊗ λ)λ"),
    ("module_morphism.alpha", "α_N f = f α_M"),
    ("module_morphism.action", "f(h·m) = h·f(m)"),
    ("phi.morphism", "α_M : M -> G(M) is H-linear"),
    ("phi.natural", "α_N f = f α_M for a supplied morphism f"),
    ("associator", "(U ⊗ V) ⊗ F(W) and F(U) ⊗ (V ⊗ W) carry the same action"),
    (
        "associator.alpha",
        "(U ⊗ V) ⊗ F(W) and F(U) ⊗ (V ⊗ W) carry the same twisting map",
    ),
    ("compmodulealgebra", "(αψ)(h)·(aa') = Σ (h(1)·a)(h(2)·a')"),
    ("R.alpha_invariant", "(α ⊗ α)R = R"),
    ("R.psi_invariant", "(ψ ⊗ ψ)R = R"),
    ("eq29", "RΔ(h) = Δ^cop(h)R, through structure maps"),
    ("eq38", "RΔ(h) = Δ^cop(h)R, on structure constants"),
    (
        "eq30",
        "(Δ ⊗ α)(R) = Σ ψ(s_i) ⊗ ψ(s_j) ⊗ t_i t_j, through structure maps",
    ),
    (
        "eq39",
        "(Δ ⊗ α)(R) = Σ ψ(s_i) ⊗ ψ(s_j) ⊗ t_i t_j, on structure constants",
    ),
    (
        "eq31",
        "(α ⊗ Δ)(R) = Σ s_i s_j ⊗ ψ(t_j) ⊗ ψ(t_i), through structure maps",
    ),
    (
        "eq60",
        "(α ⊗ Δ)(R) = Σ s_i s_j ⊗ ψ(t_j) ⊗ ψ(t_i), on structure constants",
    ),
    ("remQT.1", "(Δ ⊗ αψ)(R) = Σ s_i ⊗ s_j ⊗ t_i t_j"),
    ("remQT.2", "(αψ ⊗ Δ)(R) = Σ s_i s_j ⊗ t_j ⊗ t_i"),
    ("remQT.agreement", "remQT.1 and remQT.2 agree with eq39 and eq60"),
    ("eq27.alpha", "(α_V ⊗ α_U)c = c(α_U ⊗ α_V)"),
    ("eq27.linear", "c(h·(u ⊗ v)) = h·c(u ⊗ v) in G(V) ⊗ G(U)"),
    ("eq27.natural", "c_{U',V'}(f ⊗ g) = (g ⊗ f)c_{U,V}"),
    ("eq27.G", "G(c_{U,V}) = c_{G(U),G(V)}"),
    (
        "eq45",
        "(id ⊗ id ⊗ α_U)c_{F(U),V⊗W} = (id_V ⊗ c_{G(U),W})(c_{U,V} ⊗ id_W)",
    ),
    (
        "eq50",
        "(α_W ⊗ id ⊗ id)c_{U⊗V,F(W)} = (c_{U,G(W)} ⊗ id_V)(id_U ⊗ c_{V,W})",
    ),
    ("fig59", "weak hom-Yang-Baxter identity for the braiding"),
    ("ybe.compat", "(α ⊗ α)B = B(α ⊗ α)"),
    ("eq145", "(B ⊗ α)(α ⊗ B)(B ⊗ α) = (α ⊗ B)(B ⊗ α)(α ⊗ B)"),
    (
        "hYBeB",
        "(α_P ⊗ B_{M,N})(B_{M,P} ⊗ α_N)(α_M ⊗ B_{N,P}) = (B_{N,P} ⊗ α_M)(α_N ⊗ B_{M,P})(B_{M,N} ⊗ α_P)",
    ),
    (
        "homYD",
        "Σ (h(1)·m)(-1)α²(h(2)) ⊗ (h(1)·m)(0) = Σ α²(h(1))α(m(-1)) ⊗ α(h(2))·m(0)",
    ),
    ("defB", "(α_N ⊗ α_M)B = B(α_M ⊗ α_N)"),
    ("B_module", "B : M ⊗ N -> F(N) ⊗ F(M) is H-linear"),
    ("B_comodule", "B : M ⊗ N -> F(N) ⊗ F(M) is H-colinear"),
    ("F_B", "B_{F(M),F(N)} = B_{M,N}"),
    ("eq3333c", "pentagon for b"),
    (
        "eq3333c.yd_cross_check",
        "built b agrees with the Yetter-Drinfeld associator",
    ),
    (
        "eq9999d.hexagon1",
        "b_{V,W,U}c_{U,V⊗W}b_{U,V,W} = (id_V ⊗ c_{U,W})b_{V,U,W}(c_{U,V} ⊗ id_W)",
    ),
    (
        "eq9999d.hexagon2",
        "b⁻¹_{W,U,V}c_{U⊗V,W}b⁻¹_{U,V,W} = (c_{U,W} ⊗ id_V)b⁻¹_{U,W,V}(id_U ⊗ c_{V,W})",
    ),
    (
        "eq9999d.yd_cross_check",
        "built c agrees with the Yetter-Drinfeld quasi-braiding",
    ),
];

/// The statement of a known identifier.
pub fn describe(id: &str) -> Option<&'static str> {
    AXIOMS.iter().find(|(k, _)| *k == id).map(|(_, v)| *v)
}
