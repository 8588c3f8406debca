#pragma once

// JSON renderings of the public pipeline outputs.  These are the wire
// formats of the CLI; the golden corpus pins them byte for byte, so every
// container here must iterate in canonical order.

#include <json.hpp>

#include "nsfusion/density.hpp"
#include "nsfusion/fusion.hpp"
#include "nsfusion/ns.hpp"
#include "nsfusion/osp.hpp"
#include "nsfusion/singvec.hpp"
#include "nsfusion/zhu.hpp"

namespace nsf::report {

using json = nlohmann::ordered_json;

inline json element_terms(const ns::VermaElement& v) {
    json arr = json::array();
    for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it)
        arr.push_back(json{{"coeff", it->second.to_string()}, {"word", it->first.to_string()}});
    return arr;
}

inline json singvec_compute(long q, const ns::VermaElement& sv) {
    return json{{"q", q}, {"level", HalfInt(q).to_string()}, {"terms", element_terms(sv)}};
}

inline json singvec_validate(const singvec::ValidationReport& rep) {
    json out{{"q", rep.q},
             {"proportional", rep.proportional},
             {"bsa_terms", element_terms(rep.bsa)},
             {"kernel_terms", element_terms(rep.kernel)}};
    if (rep.proportional) {
        out["ratio"] = rep.ratio.to_string();
    } else {
        out["residual_g12"] = element_terms(rep.residual_g12);
        out["residual_g32"] = element_terms(rep.residual_g32);
    }
    return out;
}

inline json fusion_table_entry(fusion::Ring& ring, long q, long r) {
    json entries = json::array();
    for (long s = std::abs(q - r) + 1; s <= q + r - 1; s += 2) {
        int dim = ring.structure_constant(q, r, s);
        entries.push_back(json{{"s", s}, {"dim", dim}, {"parity", zhu::parity_name(ring.parity(q, r, s))}});
    }
    return json{{"q", q}, {"r", r}, {"entries", entries}};
}

inline json fusion_table(fusion::Ring& ring, long max) {
    json tables = json::array();
    for (long q = 1; q <= max; q += 2)
        for (long r = 1; r <= max; r += 2) tables.push_back(fusion_table_entry(ring, q, r));
    return json{{"max", max}, {"tables", tables}};
}

inline json zhu_qpoly(long q, long r) {
    zhu::QPolynomials qp = zhu::q_polynomials(q, r);
    auto roots = [&](const Polynomial& p) {
        json arr = json::array();
        for (long s = 1; s <= q + r + 1; s += 2) {
            RadicalNumber h(ns::h_label(s));
            long mult = p.root_multiplicity(h);
            if (mult > 0) arr.push_back(json{{"s", s}, {"h", h.to_string()}, {"multiplicity", mult}});
        }
        return arr;
    };
    return json{{"q", q},         {"r", r},          {"Q1", qp.q1.to_string()}, {"Q2", qp.q2.to_string()},
                {"roots_q1", roots(qp.q1)}, {"roots_q2", roots(qp.q2)}};
}

inline json density_project(long q, long r) {
    density::Projection proj = density::project(q, r);
    density::ClosedForm cf = density::closed_form_C(q, r);
    zhu::QPolynomials qp = zhu::q_polynomials(q, r);
    Polynomial q1h(Var::h, qp.q1.coeffs()), q2h(Var::h, qp.q2.coeffs());
    bool matches = proj.c1.proportional_to(q2h) && proj.c2.proportional_to(q1h);
    return json{{"q", q},
                {"r", r},
                {"C1", proj.c1.to_string()},
                {"C2", proj.c2.to_string()},
                {"matches_zhu", matches},
                {"closed_form_orientation", density::closed_form_orientation(proj, cf)}};
}

inline json osp_tensor(HalfInt j1, HalfInt j2) {
    auto dec = osp::tensor_decompose(j1, j2);
    auto closed = osp::grothendieck_product(j1, j2);
    json summands = json::array();
    for (HalfInt k : dec) summands.push_back(k.to_string());
    return json{{"j1", j1.to_string()},
                {"j2", j2.to_string()},
                {"summands", summands},
                {"matches_closed_form", dec == closed}};
}

inline json osp_verify(HalfInt j) {
    auto viol = osp::verify_relations(j);
    return json{{"j", j.to_string()}, {"violations", viol}};
}

inline json ns_gram(const RadicalNumber& c, const RadicalNumber& h, HalfInt level) {
    auto basis = ns::pbw_basis(level);
    auto m = ns::shapovalov_matrix(c, h, level);
    json words = json::array();
    for (const auto& w : basis) words.push_back(w.to_string());
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return json{{"c", c.to_string()},
                {"h", h.to_string()},
                {"level", level.to_string()},
                {"basis", words},
                {"matrix", rows}};
}

inline json ns_locus(const RadicalNumber& c, HalfInt max_level) {
    auto points = ns::reducibility_locus(c, max_level);
    json arr = json::array();
    for (const auto& pt : points)
        arr.push_back(json{{"p", pt.p}, {"q", pt.q}, {"t", pt.t.to_string()}, {"h", pt.h.to_string()}});
    return json{{"c", c.to_string()}, {"max_level", max_level.to_string()}, {"points", arr}};
}

}  // namespace nsf::report
