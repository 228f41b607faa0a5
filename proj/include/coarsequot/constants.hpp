#pragma once

#include <string>
#include <vector>

#include "coarsequot/rational.hpp"

namespace coarsequot {

// Base inputs of the constants ledger. delta/k/m0/r are measured from the
// instance; d, phi, omega, aleph are measured empirically by sibling modules
// when the instance provides them (no closed formulas exist); e, psi, l1, sha
// are structure inputs.
struct BaseConstants {
    Rational delta;  // hyperbolicity of X
    Rational k;      // quasiconvexity of the family
    Rational m0;     // geometric separation
    Rational r;      // coboundedness of the G-action
    Rational e;      // hierarchy constant (0 if no HHS attached)
    Rational d;      // de-electrification defect
    Rational phi;    // Morse constant (measured)
    Rational psi;    // coboundedness of the H_Y actions
    Rational aleph;  // bound on diam pi_U(H_Y y)
    Rational omega;  // nearest point path constant (measured)
    Rational l1;     // spinning threshold for the modified cone-off (input)
    Rational sha;    // projection defect between X and X' (input)

    // which of d/phi/omega/aleph were measured rather than supplied
    std::vector<std::string> measured_fields;

    void validate() const; // throws NegativeInput
};

// Every derived constant of the ledger, produced by derive() below. The
// parameterized families M(t), tau(L), c0(t) are exposed as methods.
class DerivedConstants {
  public:
    DerivedConstants() = default;

    Rational j;           // Lipschitz constant of projections
    Rational b;           // diameter bound for cross projections
    Rational r_script;    // cone point capture radius in the strong BGI proof
    Rational c0_bgi;      // strong BGI, endpoints in the base
    Rational c_bgi;       // strong BGI, all of the cone-off
    Rational theta1;      // projection axiom (IV) constant
    Rational d0;          // covering segment length for axiom (V)
    Rational theta;       // projection axioms over the family
    Rational theta_pts;   // projection axioms over all cone-off vertices
    Rational theta_tilde; // equivariant projection constant
    Rational zhe;         // projection complex edge threshold
    Rational cm_edge;     // adjacent-vertex projection bound
    Rational cm_path;     // bounded path image constant
    Rational cm_geo;      // geodesic image constant
    Rational cm_m;
    Rational l0;
    Rational l_short;
    Rational l_lift;
    Rational l_hyp;
    Rational l_min;       // spinning threshold
    Rational cone_a;      // modified cone-off neighborhood radius
    Rational l_tilde;     // quotient HHG spinning threshold
    Rational beth;        // quotient projection diameter bound
    Rational passup_c1;
    Rational passup_c2;

    Rational separation_m(const Rational& t) const; // M(t)
    Rational tau(const Rational& l) const;          // injectivity radius
    Rational passup_c0(const Rational& t) const;
    Rational passup_c3(const Rational& t) const;

    const BaseConstants& base() const { return base_; }

  private:
    friend DerivedConstants derive(const BaseConstants& base);
    BaseConstants base_;
};

DerivedConstants derive(const BaseConstants& base);

// One ledger row: name, value, and the recomputed formula it must equal.
struct IdentityCheck {
    std::string name;
    Rational value;
    Rational expected;
    bool holds() const { return value == expected; }
};

// Re-evaluates each formula of the ledger from the base constants and
// compares with the derived values; all must hold exactly.
std::vector<IdentityCheck> verify_formula_identities(const BaseConstants& base,
                                                     const DerivedConstants& d);

struct LinearSegment {
    int first_sample = 0;
    int last_sample = 0;
    Rational slope;
    Rational intercept;
};

struct LinearFit {
    Rational slope;      // fit through the first two samples
    Rational intercept;
    Rational max_residual;
    std::vector<LinearSegment> segments; // maximal runs of constant slope
};

// Evaluates one named derived constant across M0 sample values with the
// other base fields fixed, and fits slope/intercept per segment.
LinearFit check_linear_in_m0(const BaseConstants& base, const std::string& which,
                             const std::vector<Rational>& m0_samples);

std::vector<std::string> ledger_constant_names();
Rational ledger_value(const DerivedConstants& d, const std::string& name);

} // namespace coarsequot
