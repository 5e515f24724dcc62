#include "hecone/report.hpp"

#include "hecone/errors.hpp"

namespace hecone {

namespace {

Json poly_terms_json(const MPoly& p) {
    Json terms = Json::array();
    const auto& vars = p.ring()->vars;
    // leading terms first, matching the printed form
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Json mono = Json::object();
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) mono[vars[v]] = e[v];
        terms.push_back(Json{{"coeff", rat_to_string(c)}, {"monomial", mono}});
    }
    return terms;
}

} // namespace

Json presentation_to_json(const RollingFactorsPresentation& pres) {
    Json j;
    switch (pres.kind) {
        case ConeKind::CurveKG12: j["kind"] = "curve_cone_kg12"; break;
        case ConeKind::CurveGeneral: j["kind"] = "curve_cone_general"; break;
        case ConeKind::Points: j["kind"] = "points_cone"; break;
    }
    j["g"] = pres.g;
    j["d"] = pres.d;
    if (pres.k >= 0) j["k"] = pres.k;
    j["coordinates"] = pres.ring->vars;
    Json top = Json::array(), bot = Json::array();
    for (int c = 0; c < pres.num_cols(); ++c) {
        top.push_back(pres.ring->vars[pres.top_var(c)]);
        bot.push_back(pres.ring->vars[pres.bot_var(c)]);
    }
    j["matrix"] = Json::array({top, bot});
    Json gens = Json::array();
    for (int i = 0; i < pres.num_gens(); ++i)
        gens.push_back(Json{{"name", pres.gen_name(i)},
                            {"terms", poly_terms_json(pres.generator(i))}});
    j["generators"] = gens;
    j["num_minors"] = pres.minors.size();
    j["num_phis"] = pres.phis.size();
    return j;
}

Json dim_table_to_json(const DimTable& t, const std::string& provenance) {
    Json arr = Json::array();
    for (const auto& [nu, dim] : t.dims)
        arr.push_back(Json{{"nu", nu}, {"dim", dim}});
    return Json{{"provenance", provenance}, {"dims", arr}};
}

Json components_to_json(const std::vector<ComponentDescriptor>& comps) {
    Json arr = Json::array();
    for (const auto& c : comps) {
        Json hp = Json::array();
        for (const auto& v : c.hyperplane) hp.push_back(v.get_str());
        arr.push_back(Json{{"subset", c.subset},
                           {"class", c.canonical},
                           {"hyperplane", hp},
                           {"parity", c.even ? "even" : "odd"}});
    }
    return arr;
}

Json base_space_to_json(const BaseSpaceSystem& sys) {
    Json j;
    j["g"] = sys.g;
    j["k"] = sys.k;
    j["variables"] = sys.ring->vars;
    Json eqs = Json::array();
    for (const auto& e : sys.equations) eqs.push_back(e.to_string());
    j["equations"] = eqs;
    return j;
}

Json fin_ab_group_to_json(const FinAbGroup& grp) {
    Json f = Json::array();
    for (const auto& x : grp.invariant_factors) f.push_back(x.get_str());
    return Json{{"free_rank", grp.free_rank}, {"torsion", f}, {"pretty", grp.to_string()}};
}

Json t1_report(const RollingFactorsPresentation& pres) {
    Json j;
    DimTable oracle;
    for (int nu = -2; nu <= 0; ++nu) oracle.dims[nu] = t1_oracle(pres, nu);
    DimTable formula = t1_formula(pres.g, pres.d,
                                  pres.kind == ConeKind::Points ? ConeShape::Points
                                                                : ConeShape::Curve);
    DimTable formula_window;
    for (int nu = -2; nu <= 0; ++nu) formula_window.dims[nu] = formula.at(nu);
    j["oracle"] = dim_table_to_json(oracle, "oracle");
    j["formula"] = dim_table_to_json(formula_window, "formula");
    bool agree = true;
    for (int nu = -2; nu <= 0; ++nu)
        if (oracle.at(nu) != formula_window.at(nu)) agree = false;
    j["agree"] = agree;
    return j;
}

Json t2_report(int g, int d) {
    Json j;
    DimTable f = t2_formula(g, d);
    j["formula"] = dim_table_to_json(f, "formula");
    long t1Y = t1_formula(g, d, ConeShape::Points).total();
    long total = t2_via_main_lemma(g, d, t1Y);
    j["main_lemma_total"] = total;
    j["formula_total"] = f.total();
    j["agree"] = (total == f.total());
    return j;
}

Json topology_report(int g) {
    Json j;
    j["g"] = g;
    j["H1M"] = fin_ab_group_to_json(link_homology(g));
    Json iso = Json::array();
    for (const auto& s : isotropic_subgroups(g))
        iso.push_back(Json{{"order", s.order}, {"generator", s.generator}});
    j["isotropic"] = iso;
    Json oq = Json::object();
    for (const auto& s : isotropic_subgroups(g))
        oq[std::to_string(s.order)] = orthogonal_group_order(g, s.order);
    j["Oq"] = oq;
    if (g % 2 == 0)
        j["count"] = smoothing_data_count(g);
    else
        j["count"] = "unsupported";
    Json milnor = Json::array();
    for (int e = 0; e <= g + 1; ++e) {
        auto rep = milnor_fiber_homology(g, e);
        milnor.push_back(Json{{"e", e},
                              {"case", rep.even_case ? "even" : "odd"},
                              {"H1F", fin_ab_group_to_json(rep.h1)},
                              {"H2F_rank", rep.h2_rank},
                              {"H2F_rel", fin_ab_group_to_json(rep.h2_rel)},
                              {"min_self_intersection", rep.min_self_intersection}});
    }
    j["milnor"] = milnor;
    return j;
}

Json full_report(const HyperellipticCurve& curve, int k, std::uint64_t prime_bound) {
    const int g = curve.g;
    Json j;
    j["g"] = g;
    j["k"] = k;
    Json curvej;
    Json coeffs = Json::array();
    for (const auto& a : curve.a) coeffs.push_back(rat_to_string(a));
    curvej["coeffs"] = coeffs;
    if (curve.branch_xs) {
        Json roots = Json::array();
        for (const auto& r : *curve.branch_xs) roots.push_back(rat_to_string(r));
        curvej["roots"] = roots;
    }
    j["curve"] = curvej;

    auto pres = cone_equations_kg12(curve, k);
    j["equations"] = presentation_to_json(pres);
    j["parametrization_kernel"] = verify_parametrization(pres);
    j["t1"] = t1_report(pres);
    j["t2"] = t2_report(g, pres.d);

    auto fam = first_order_family(curve, k);
    auto chk = verify_first_order(fam);
    j["first_order_identity"] = chk.ok;
    auto base = base_space_equations(fam);
    j["base_space"] = base_space_to_json(base);
    if (k == 2 * g + 2) {
        auto hf = hilbert_function_check(base, 6);
        j["hilbert"] = hf;
        j["hilbert_expected"] = ci_hilbert_series(2 * g + 1, 6);
        long expected = 1L << (2 * g + 1);
        auto scan = scan_primes_for_point_count(base, prime_bound, expected);
        if (scan) {
            j["prime"] = scan->prime;
            j["num_points"] = scan->num_points;
            j["smooth"] = scan->num_smooth;
        } else {
            j["prime"] = nullptr;
        }
    }

    auto cc = count_components(g);
    j["components"] = Json{{"count", cc.count}, {"annotation", cc.annotation}};
    if (curve.branch_xs) {
        auto comps = enumerate_components(*curve.branch_xs);
        j["components"]["hyperplanes"] = components_to_json(comps);
    }
    j["topology"] = topology_report(g);
    return j;
}

} // namespace hecone
