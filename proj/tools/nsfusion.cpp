// Command-line front end: every pipeline of the library behind deterministic
// text/JSON output.  Numeric parameters are exact strings ("1/2",
// "15/2-3*sqrt(5)"); floating point input is rejected outright.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "nsfusion/parse.hpp"
#include "nsfusion/report.hpp"

namespace {

using nsf::HalfInt;
using nsf::Polynomial;
using nsf::RadicalNumber;
using nsf::Rational;
using nsf::Var;
using json = nsf::report::json;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& j, const std::string& text) const {
        const std::string& body = format == "text" ? text : j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(path, std::ios::binary);
            f << body;
        }
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", out.path, "write output to a file instead of stdout");
}

std::string plain_table(nsf::fusion::Ring& ring, long max) {
    // aligned Cayley table of generator products
    std::vector<std::vector<std::string>> cells;
    size_t width = 0;
    for (long q = 1; q <= max; q += 2) {
        std::vector<std::string> row;
        for (long r = 1; r <= max; r += 2) {
            nsf::fusion::FusionElement p = ring.generator_product(q, r);
            std::string cell;
            for (const auto& [s, k] : p.mult) {
                if (!cell.empty()) cell += "+";
                if (k != 1) cell += std::to_string(k) + "*";
                cell += "b(" + std::to_string(s) + ")";
            }
            width = std::max(width, cell.size());
            row.push_back(cell);
        }
        cells.push_back(row);
    }
    std::string out;
    for (long q = 1; q <= max; q += 2) {
        for (size_t c = 0; c < cells[(q - 1) / 2].size(); ++c) {
            std::string& cell = cells[(q - 1) / 2][c];
            out += cell + std::string(width - cell.size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify all: the full cross-check chain with deterministic output
// ---------------------------------------------------------------------------

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string = pass, otherwise failure detail
};

long worker_count() {
    const char* env = std::getenv("NSFUSION_WORKERS");
    if (!env) return 1;
    long n = std::strtol(env, nullptr, 10);
    return n >= 1 ? n : 1;
}

int verify_all(long max, const Output& out) {
    using namespace nsf;
    std::vector<Check> checks;

    for (long tw = 0; tw <= 5; ++tw) {
        checks.push_back({"osp relations j=" + HalfInt(tw).to_string(), [tw] {
                              auto viol = osp::verify_relations(HalfInt(tw));
                              return viol.empty() ? std::string() : viol.front();
                          }});
    }
    for (long t1 = 0; t1 <= 5; ++t1)
        for (long t2 = 0; t2 <= t1; ++t2) {
            checks.push_back({"osp tensor j1=" + HalfInt(t1).to_string() + " j2=" + HalfInt(t2).to_string(),
                              [t1, t2] {
                                  auto dec = osp::tensor_decompose(HalfInt(t1), HalfInt(t2));
                                  return dec == osp::grothendieck_product(HalfInt(t1), HalfInt(t2))
                                             ? std::string()
                                             : "decomposition differs from closed form";
                              }});
        }

    // the singular vectors are shared by the remaining checks
    std::map<long, ns::VermaElement> sv;
    for (long q = 1; q <= max; q += 2) sv.emplace(q, singvec::singular_vector(q));

    for (long q = 1; q <= max; q += 2) {
        checks.push_back({"singvec kernel q=" + std::to_string(q), [q, &sv] {
                              const ns::VermaElement& v = sv.at(q);
                              if (!ns::singular_verify(v)) return std::string("kernel vector not singular");
                              if (v.homogeneous_level() != HalfInt(q)) return std::string("wrong level");
                              singvec::ValidationReport rep = singvec::bsa_validate(q);
                              if (q == 1 && (!rep.proportional || rep.ratio != RadicalNumber(1)))
                                  return std::string("q=1 transcription must match with ratio 1");
                              return std::string();
                          }});
    }

    for (long q = 1; q <= max; q += 2)
        for (long r = 1; r <= max; r += 2) {
            checks.push_back({"zhu roots q=" + std::to_string(q) + " r=" + std::to_string(r), [q, r, &sv] {
                                  zhu::QPolynomials qp = zhu::q_polynomials_from(sv.at(q), q, r);
                                  if (qp.q1.degree() + qp.q2.degree() != q) return std::string("degree sum != q");
                                  for (bool even : {true, false}) {
                                      const Polynomial& p = even ? qp.q2 : qp.q1;
                                      std::map<std::string, bool> expect, got;
                                      for (long s : zhu::expected_labels(q, r, even))
                                          expect[RadicalNumber(ns::h_label(s)).to_string()] = true;
                                      long mult_total = 0;
                                      for (long s = 1; s <= q + r + 1; s += 2) {
                                          RadicalNumber h(ns::h_label(s));
                                          long m = p.root_multiplicity(h);
                                          if (m > 0) got[h.to_string()] = true;
                                          mult_total += m;
                                      }
                                      if (expect != got) return std::string(even ? "Q2" : "Q1") + " root set differs";
                                      if (mult_total != p.degree())
                                          return std::string("roots unaccounted for in ") + (even ? "Q2" : "Q1");
                                  }
                                  return std::string();
                              }});
            checks.push_back({"density match q=" + std::to_string(q) + " r=" + std::to_string(r), [q, r, &sv] {
                                  zhu::QPolynomials qp = zhu::q_polynomials_from(sv.at(q), q, r);
                                  density::Projection proj = density::project(q, r);
                                  Polynomial q1h(Var::h, qp.q1.coeffs()), q2h(Var::h, qp.q2.coeffs());
                                  if (!proj.c1.proportional_to(q2h)) return std::string("C1 not prop. to Q2");
                                  if (!proj.c2.proportional_to(q1h)) return std::string("C2 not prop. to Q1");
                                  return std::string();
                              }});
            checks.push_back({"fusion window q=" + std::to_string(q) + " r=" + std::to_string(r), [q, r, &sv] {
                                  zhu::QPolynomials a = zhu::q_polynomials_from(sv.at(q), q, r);
                                  zhu::QPolynomials b = zhu::q_polynomials_from(sv.at(r), r, q);
                                  for (long s = 1; s <= q + r + 1; s += 2) {
                                      int dim = zhu::verma_fusion_dim(a, s) && zhu::verma_fusion_dim(b, s) ? 1 : 0;
                                      int want = (s >= std::abs(q - r) + 1 && s <= q + r - 1) ? 1 : 0;
                                      if (dim != want)
                                          return "dim at s=" + std::to_string(s) + " is " + std::to_string(dim);
                                  }
                                  return std::string();
                              }});
        }

    checks.push_back({"fusion grothendieck isomorphism", [max] {
                          nsf::fusion::Ring ring;
                          return ring.verify_isomorphism(max) ? std::string() : "mapping is not an isomorphism";
                      }});
    checks.push_back({"fusion ring axioms", [max] {
                          nsf::fusion::Ring ring;
                          return ring.verify_ring_axioms(max) ? std::string() : "axioms fail";
                      }});

    // run, optionally in parallel; results land in canonical slots
    std::vector<std::string> results(checks.size());
    const long workers = std::min<long>(worker_count(), static_cast<long>(checks.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < checks.size(); ++i) results[i] = checks[i].run();
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (long w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < checks.size(); i = next.fetch_add(1))
                    results[i] = checks[i].run();
            });
        for (auto& th : pool) th.join();
    }

    std::ostringstream text;
    size_t failed = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        if (results[i].empty()) {
            text << "ok " << checks[i].name << "\n";
        } else {
            text << "FAIL " << checks[i].name << ": " << results[i] << "\n";
            ++failed;
        }
    }
    text << (failed ? "FAILED " : "passed ") << (checks.size() - failed) << "/" << checks.size() << " checks\n";

    json j{{"max", max}, {"checks", json::array()}, {"failed", failed}};
    for (size_t i = 0; i < checks.size(); ++i)
        j["checks"].push_back(json{{"name", checks[i].name}, {"ok", results[i].empty()},
                                   {"detail", results[i]}});
    out.emit(j, text.str());
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-ring calculator for the degenerate N=1 Neveu-Schwarz minimal models at c=3/2"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    std::string j1s, j2s, js, cs, hs, levels, qs, rs, maxs = "9";
    Output out;

    auto subcommand = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");  // keep -h free for the exact --h option
        return sub;
    };

    auto* osp_cmd = subcommand(&app, "osp", "finite-dimensional osp(1|2) calculus");
    osp_cmd->require_subcommand(1);
    auto* osp_tensor = subcommand(osp_cmd, "tensor", "decompose V(j1) (x) V(j2)");
    osp_tensor->add_option("--j1", j1s)->required();
    osp_tensor->add_option("--j2", j2s)->required();
    add_output_flags(osp_tensor, out);
    auto* osp_verify = subcommand(osp_cmd, "verify", "check the defining relations on V(j)");
    osp_verify->add_option("--j", js)->required();
    add_output_flags(osp_verify, out);

    auto* ns_cmd = subcommand(&app, "ns", "Neveu-Schwarz Verma module engine");
    ns_cmd->require_subcommand(1);
    auto* ns_gram = subcommand(ns_cmd, "gram", "Shapovalov matrix of a weight level");
    ns_gram->add_option("--c", cs)->required();
    ns_gram->add_option("--h", hs)->required();
    ns_gram->add_option("--level", levels)->required();
    add_output_flags(ns_gram, out);
    auto* ns_locus = subcommand(ns_cmd, "locus", "reducibility locus at a central charge");
    ns_locus->add_option("--c", cs)->required();
    ns_locus->add_option("--max-level", levels)->required();
    add_output_flags(ns_locus, out);

    auto* sv_cmd = subcommand(&app, "singvec", "singular vectors of M(3/2, h_{1,q})");
    sv_cmd->require_subcommand(1);
    auto* sv_compute = subcommand(sv_cmd, "compute", "kernel singular vector at level q/2");
    sv_compute->add_option("--q", qs)->required();
    add_output_flags(sv_compute, out);
    auto* sv_validate = subcommand(sv_cmd, "validate", "Benoit--Saint-Aubin transcription report");
    sv_validate->add_option("--q", qs)->required();
    add_output_flags(sv_validate, out);

    auto* zhu_cmd = subcommand(&app, "zhu", "Zhu bimodule fusion polynomials");
    zhu_cmd->require_subcommand(1);
    auto* zhu_qpoly = subcommand(zhu_cmd, "qpoly", "Q1/Q2 of a pair (q, r)");
    zhu_qpoly->add_option("--q", qs)->required();
    zhu_qpoly->add_option("--r", rs)->required();
    add_output_flags(zhu_qpoly, out);

    auto* fusion_cmd = subcommand(&app, "fusion", "the fusion ring A_s");
    fusion_cmd->require_subcommand(1);
    auto* fusion_table = subcommand(fusion_cmd, "table", "generator products up to a bound");
    fusion_table->add_option("--max", maxs)->required();
    add_output_flags(fusion_table, out);
    auto* fusion_parity = subcommand(fusion_cmd, "parity", "even/odd refinement of one product");
    fusion_parity->add_option("--q", qs)->required();
    fusion_parity->add_option("--r", rs)->required();
    add_output_flags(fusion_parity, out);

    auto* density_cmd = subcommand(&app, "density", "super density-module projection");
    density_cmd->require_subcommand(1);
    auto* density_project = subcommand(density_cmd, "project", "C1/C2 of a pair (q, r)");
    density_project->add_option("--q", qs)->required();
    density_project->add_option("--r", rs)->required();
    add_output_flags(density_project, out);

    auto* verify_cmd = subcommand(&app, "verify", "cross-check chains");
    verify_cmd->require_subcommand(1);
    auto* verify_all_cmd = subcommand(verify_cmd, "all", "run the complete verification chain");
    verify_all_cmd->add_option("--max", maxs);
    add_output_flags(verify_all_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (osp_tensor->parsed()) {
            HalfInt j1 = nsf::parse::half_int(j1s), j2 = nsf::parse::half_int(j2s);
            json j = nsf::report::osp_tensor(j1, j2);
            std::string text = "V(" + j1.to_string() + ") (x) V(" + j2.to_string() + ") =";
            bool first = true;
            for (const auto& s : j["summands"]) {
                text += (first ? " V(" : " + V(") + s.get<std::string>() + ")";
                first = false;
            }
            out.emit(j, text + "\n");
            return j["matches_closed_form"].get<bool>() ? 0 : 1;
        }
        if (osp_verify->parsed()) {
            json j = nsf::report::osp_verify(nsf::parse::half_int(js));
            std::string text;
            for (const auto& v : j["violations"]) text += v.get<std::string>() + "\n";
            if (text.empty()) text = "all relations hold\n";
            out.emit(j, text);
            return j["violations"].empty() ? 0 : 1;
        }
        if (ns_gram->parsed()) {
            json j = nsf::report::ns_gram(nsf::parse::radical(cs), nsf::parse::radical(hs),
                                          nsf::parse::half_int(levels));
            std::string text;
            for (const auto& row : j["matrix"]) {
                for (const auto& e : row) text += e.get<std::string>() + "  ";
                text += "\n";
            }
            out.emit(j, text);
            return 0;
        }
        if (ns_locus->parsed()) {
            json j = nsf::report::ns_locus(nsf::parse::radical(cs), nsf::parse::half_int(levels));
            std::string text;
            for (const auto& pt : j["points"])
                text += "(p,q) = (" + std::to_string(pt["p"].get<long>()) + "," +
                        std::to_string(pt["q"].get<long>()) + ")  t = " + pt["t"].get<std::string>() +
                        "  h = " + pt["h"].get<std::string>() + "\n";
            out.emit(j, text);
            return 0;
        }
        if (sv_compute->parsed()) {
            long q = nsf::parse::odd_label(qs);
            nsf::ns::VermaElement sv = nsf::singvec::singular_vector(q);
            out.emit(nsf::report::singvec_compute(q, sv), nsf::ns::render_element(sv));
            return 0;
        }
        if (sv_validate->parsed()) {
            long q = nsf::parse::odd_label(qs);
            nsf::singvec::ValidationReport rep = nsf::singvec::bsa_validate(q);
            json j = nsf::report::singvec_validate(rep);
            std::string text = "q=" + std::to_string(q) +
                               (rep.proportional ? " proportional, ratio " + rep.ratio.to_string()
                                                 : " NOT proportional") +
                               "\n";
            out.emit(j, text);
            return 0;
        }
        if (zhu_qpoly->parsed()) {
            json j = nsf::report::zhu_qpoly(nsf::parse::odd_label(qs), nsf::parse::odd_label(rs));
            std::string text = "Q1 = " + j["Q1"].get<std::string>() + "\nQ2 = " + j["Q2"].get<std::string>() + "\n";
            out.emit(j, text);
            return 0;
        }
        if (fusion_table->parsed()) {
            long max = nsf::parse::odd_label(maxs);
            nsf::fusion::Ring ring;
            out.emit(nsf::report::fusion_table(ring, max), plain_table(ring, max));
            return 0;
        }
        if (fusion_parity->parsed()) {
            nsf::fusion::Ring ring;
            json j = nsf::report::fusion_table_entry(ring, nsf::parse::odd_label(qs), nsf::parse::odd_label(rs));
            std::string text;
            for (const auto& e : j["entries"])
                text += "s=" + std::to_string(e["s"].get<long>()) + " dim=" +
                        std::to_string(e["dim"].get<int>()) + " parity=" + e["parity"].get<std::string>() + "\n";
            out.emit(j, text);
            return 0;
        }
        if (density_project->parsed()) {
            json j = nsf::report::density_project(nsf::parse::odd_label(qs), nsf::parse::odd_label(rs));
            std::string text = "C1 = " + j["C1"].get<std::string>() + "\nC2 = " + j["C2"].get<std::string>() +
                               "\nmatches_zhu = " + (j["matches_zhu"].get<bool>() ? "true" : "false") +
                               "\norientation = " + j["closed_form_orientation"].get<std::string>() + "\n";
            out.emit(j, text);
            return j["matches_zhu"].get<bool>() ? 0 : 1;
        }
        if (verify_all_cmd->parsed()) {
            return verify_all(nsf::parse::odd_label(maxs), out);
        }
    } catch (const nsf::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const nsf::CalcError& e) {
        json diag{{"error", e.what()}};
        std::cerr << diag.dump(2) << "\n";
        return 1;
    }
    return 2;
}
