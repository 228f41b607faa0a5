#include "coarsequot/constants.hpp"

#include <algorithm>

#include "coarsequot/errors.hpp"

namespace coarsequot {

void BaseConstants::validate() const {
    for (const Rational* v : {&delta, &k, &m0, &r, &e, &d, &phi, &psi, &aleph, &omega, &l1, &sha})
        if (v->negative()) throw NegativeInput("base constant below zero");
}

Rational DerivedConstants::separation_m(const Rational& t) const {
    return base_.m0 + Rational(2) * base_.k + Rational(2) * t + Rational(4) * base_.delta +
           Rational(2);
}

Rational DerivedConstants::tau(const Rational& l) const {
    return (l / Rational(10) - Rational(2) * (b + j * base_.r)) / j;
}

Rational DerivedConstants::passup_c0(const Rational& t) const {
    return t + Rational(4) * base_.aleph + Rational(20) * base_.e + Rational(2) * beth;
}

Rational DerivedConstants::passup_c3(const Rational& t) const {
    return passup_c0(t) + passup_c2 + Rational(12) * base_.e + Rational(2);
}

DerivedConstants derive(const BaseConstants& base) {
    base.validate();
    DerivedConstants out;
    out.base_ = base;
    const Rational &dl = base.delta, &k = base.k, &r = base.r, &e = base.e, &d = base.d;

    out.j = Rational(2) * k + Rational(10) * dl + Rational(2);
    out.b = out.separation_m(Rational(2) * k + Rational(7) * dl + Rational(1));
    out.r_script = Rational(2) * dl + Rational(2) * k + d + Rational(2);
    out.c0_bgi = Rational(2) * out.j +
                 (Rational(2) * out.r_script + Rational(4)) * rat_max(out.b, out.j);
    out.c_bgi = out.c0_bgi + Rational(2) * out.b;
    out.theta1 = Rational(2) * out.b + out.j * (Rational(2) * dl + k + Rational(1));
    out.d0 = Rational(2) * k + Rational(4) * dl + out.separation_m(Rational(2) * k + Rational(4) * dl) +
             Rational(1);
    out.theta = Rational(3) * out.j * out.d0 + Rational(2) * out.b +
                Rational(2) * out.j * (Rational(3) * dl + Rational(1));
    out.theta_pts = out.theta + Rational(2) * (out.b + out.j * r) + out.j;
    out.theta_tilde =
        rat_max(out.theta_pts,
                Rational(2) * (out.j * r + out.b + out.theta_pts) / Rational(33));
    out.zhe = Rational(33) * out.theta_tilde;
    out.cm_edge = out.zhe + Rational(2) * out.theta_pts;
    out.cm_path = Rational(11) * out.theta_tilde + Rational(2) * out.theta_pts;
    out.cm_geo = Rational(22) * out.theta_tilde + Rational(6) * out.zhe + Rational(2) * out.theta_pts;
    out.cm_m = Rational(11) * out.cm_edge + Rational(6) * out.cm_geo + Rational(5) * out.cm_path;
    out.l0 = Rational(4) * (out.cm_m + out.theta_pts) + Rational(1);
    out.l_short = rat_max(out.l0, Rational(5) * out.cm_m, Rational(14) * out.theta_pts);
    out.l_lift = rat_max(out.l_short, Rational(40) * out.cm_geo);
    out.l_hyp = out.l_lift;
    out.l_min = rat_max(out.l_hyp, Rational(30) * out.c_bgi,
                        Rational(10) * (Rational(2) * (out.b + out.j * r) + Rational(2) * out.j +
                                        Rational(1)));
    out.cone_a = rat_max(k, Rational(3) * e) + Rational(4) * e + d;
    out.l_tilde = rat_max(base.l1, Rational(100) * out.c_bgi + base.sha,
                          Rational(20) * (out.c_bgi + e * out.j) + base.sha);
    out.beth = Rational(2) * base.aleph + Rational(27) * e;
    out.passup_c1 = Rational(2) * out.cone_a + Rational(3) * e + Rational(2) * out.c_bgi +
                    out.j * (k + d + Rational(2) * e) + base.psi;
    out.passup_c2 = Rational(2) * out.passup_c1 + Rational(2) * d + Rational(2) * k;
    return out;
}

std::vector<IdentityCheck> verify_formula_identities(const BaseConstants& base,
                                                     const DerivedConstants& dc) {
    const Rational &dl = base.delta, &k = base.k, &m0 = base.m0, &r = base.r, &e = base.e,
                   &d = base.d;
    const Rational t_probe(5);   // sample argument for the parameterized rows
    const Rational l_probe = dc.l_min + Rational(10);

    auto m_of = [&](const Rational& t) {
        return m0 + Rational(2) * k + Rational(2) * t + Rational(4) * dl + Rational(2);
    };

    std::vector<IdentityCheck> checks;
    auto add = [&](const std::string& name, const Rational& value, const Rational& expected) {
        checks.push_back({name, value, expected});
    };

    add("J", dc.j, Rational(2) * k + Rational(10) * dl + Rational(2));
    add("M(t)", dc.separation_m(t_probe), m_of(t_probe));
    add("B", dc.b, m_of(Rational(2) * k + Rational(7) * dl + Rational(1)));
    add("R_script", dc.r_script, Rational(2) * dl + Rational(2) * k + d + Rational(2));
    add("C0", dc.c0_bgi,
        Rational(2) * dc.j + (Rational(2) * dc.r_script + Rational(4)) * rat_max(dc.b, dc.j));
    add("C", dc.c_bgi, dc.c0_bgi + Rational(2) * dc.b);
    add("theta1", dc.theta1, Rational(2) * dc.b + dc.j * (Rational(2) * dl + k + Rational(1)));
    add("D0", dc.d0,
        Rational(2) * k + Rational(4) * dl + m_of(Rational(2) * k + Rational(4) * dl) + Rational(1));
    add("theta", dc.theta,
        Rational(3) * dc.j * dc.d0 + Rational(2) * dc.b +
            Rational(2) * dc.j * (Rational(3) * dl + Rational(1)));
    add("Theta", dc.theta_pts, dc.theta + Rational(2) * (dc.b + dc.j * r) + dc.j);
    add("Theta_tilde", dc.theta_tilde,
        rat_max(dc.theta_pts, Rational(2) * (dc.j * r + dc.b + dc.theta_pts) / Rational(33)));
    add("Zhe", dc.zhe, Rational(33) * dc.theta_tilde);
    add("C_e", dc.cm_edge, dc.zhe + Rational(2) * dc.theta_pts);
    add("C_p", dc.cm_path, Rational(11) * dc.theta_tilde + Rational(2) * dc.theta_pts);
    add("C_g", dc.cm_geo,
        Rational(22) * dc.theta_tilde + Rational(6) * dc.zhe + Rational(2) * dc.theta_pts);
    add("m", dc.cm_m,
        Rational(11) * dc.cm_edge + Rational(6) * dc.cm_geo + Rational(5) * dc.cm_path);
    add("L0", dc.l0, Rational(4) * (dc.cm_m + dc.theta_pts) + Rational(1));
    add("L_short", dc.l_short, rat_max(dc.l0, Rational(5) * dc.cm_m, Rational(14) * dc.theta_pts));
    add("L_lift", dc.l_lift, rat_max(dc.l_short, Rational(40) * dc.cm_geo));
    add("L_hyp", dc.l_hyp, dc.l_lift);
    add("L_min", dc.l_min,
        rat_max(dc.l_hyp, Rational(30) * dc.c_bgi,
                Rational(10) * (Rational(2) * (dc.b + dc.j * r) + Rational(2) * dc.j + Rational(1))));
    add("tau(L)", dc.tau(l_probe),
        (l_probe / Rational(10) - Rational(2) * (dc.b + dc.j * r)) / dc.j);
    add("tau(L_min)", dc.tau(dc.l_min),
        (dc.l_min / Rational(10) - Rational(2) * (dc.b + dc.j * r)) / dc.j);
    add("A", dc.cone_a, rat_max(k, Rational(3) * e) + Rational(4) * e + d);
    add("L_tilde", dc.l_tilde,
        rat_max(base.l1, Rational(100) * dc.c_bgi + base.sha,
                Rational(20) * (dc.c_bgi + e * dc.j) + base.sha));
    add("beth", dc.beth, Rational(2) * base.aleph + Rational(27) * e);
    add("c0(t)", dc.passup_c0(t_probe),
        t_probe + Rational(4) * base.aleph + Rational(20) * e + Rational(2) * dc.beth);
    add("c1", dc.passup_c1,
        Rational(2) * dc.cone_a + Rational(3) * e + Rational(2) * dc.c_bgi +
            dc.j * (k + d + Rational(2) * e) + base.psi);
    add("c2", dc.passup_c2, Rational(2) * dc.passup_c1 + Rational(2) * d + Rational(2) * k);
    add("c3(t)", dc.passup_c3(t_probe),
        dc.passup_c0(t_probe) + dc.passup_c2 + Rational(12) * e + Rational(2));
    return checks;
}

std::vector<std::string> ledger_constant_names() {
    return {"J",     "B",       "R_script", "C0",     "C",       "theta1", "D0",
            "theta", "Theta",   "Theta_tilde", "Zhe", "C_e",     "C_p",    "C_g",
            "m",     "L0",      "L_short",  "L_lift", "L_hyp",   "L_min",  "A",
            "L_tilde", "beth",  "c1",       "c2"};
}

Rational ledger_value(const DerivedConstants& d, const std::string& name) {
    if (name == "J") return d.j;
    if (name == "B") return d.b;
    if (name == "R_script") return d.r_script;
    if (name == "C0") return d.c0_bgi;
    if (name == "C") return d.c_bgi;
    if (name == "theta1") return d.theta1;
    if (name == "D0") return d.d0;
    if (name == "theta") return d.theta;
    if (name == "Theta") return d.theta_pts;
    if (name == "Theta_tilde") return d.theta_tilde;
    if (name == "Zhe") return d.zhe;
    if (name == "C_e") return d.cm_edge;
    if (name == "C_p") return d.cm_path;
    if (name == "C_g") return d.cm_geo;
    if (name == "m") return d.cm_m;
    if (name == "L0") return d.l0;
    if (name == "L_short") return d.l_short;
    if (name == "L_lift") return d.l_lift;
    if (name == "L_hyp") return d.l_hyp;
    if (name == "L_min") return d.l_min;
    if (name == "A") return d.cone_a;
    if (name == "L_tilde") return d.l_tilde;
    if (name == "beth") return d.beth;
    if (name == "c1") return d.passup_c1;
    if (name == "c2") return d.passup_c2;
    throw ParseError("unknown ledger constant " + name);
}

LinearFit check_linear_in_m0(const BaseConstants& base, const std::string& which,
                             const std::vector<Rational>& m0_samples) {
    if (m0_samples.size() < 3) throw InsufficientSamples();
    std::vector<Rational> values;
    values.reserve(m0_samples.size());
    for (const Rational& m0 : m0_samples) {
        BaseConstants b = base;
        b.m0 = m0;
        values.push_back(ledger_value(derive(b), which));
    }

    LinearFit fit;
    Rational dx = m0_samples[1] - m0_samples[0];
    fit.slope = (values[1] - values[0]) / dx;
    fit.intercept = values[0] - fit.slope * m0_samples[0];
    fit.max_residual = Rational(0);
    for (size_t i = 0; i < values.size(); ++i) {
        Rational res = rat_abs(values[i] - (fit.slope * m0_samples[i] + fit.intercept));
        fit.max_residual = rat_max(fit.max_residual, res);
    }

    // maximal runs of constant slope between consecutive samples
    std::vector<Rational> slopes;
    for (size_t i = 1; i < values.size(); ++i)
        slopes.push_back((values[i] - values[i - 1]) / (m0_samples[i] - m0_samples[i - 1]));
    int start = 0;
    for (size_t i = 0; i < slopes.size(); ++i) {
        bool boundary = (i + 1 == slopes.size()) || slopes[i + 1] != slopes[i];
        if (!boundary) continue;
        LinearSegment seg;
        seg.first_sample = start;
        seg.last_sample = static_cast<int>(i) + 1;
        seg.slope = slopes[i];
        seg.intercept = values[start] - slopes[i] * m0_samples[start];
        fit.segments.push_back(seg);
        start = static_cast<int>(i) + 1;
    }
    return fit;
}

} // namespace coarsequot
