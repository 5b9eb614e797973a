#include "hk/runner.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace hk {

namespace {

using nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", r.num()}, {"den", r.den()}, {"display", r.to_double()}};
}

ordered_json estimate_json(const LimitEstimate& e) {
    return ordered_json{{"raw_last", rational_json(e.raw_last)},
                        {"richardson", rational_json(e.richardson)},
                        {"error_indicator", rational_json(e.error_indicator)},
                        {"n_used", e.n_used}};
}

ordered_json check_json(const CriterionCheck& c) {
    return ordered_json{{"value", rational_json(c.value)}, {"tol", c.tol}, {"holds", c.holds}};
}

ordered_json sequence_json(const LengthSequence& seq) {
    ordered_json rows = ordered_json::array();
    for (int n = 1; n <= seq.count(); ++n) {
        rows.push_back(ordered_json{{"n", n},
                                    {"q", prime_power(seq.p, n)},
                                    {"len", seq.values[static_cast<size_t>(n - 1)]},
                                    {"a", rational_json(seq.normalized_at(n))}});
    }
    return rows;
}

ordered_json ring_json(const QuotientRing& r) {
    ordered_json rels = ordered_json::array();
    for (const auto& g : r.relations().generators())
        rels.push_back(poly_to_string(r.ambient(), g));
    return ordered_json{{"p", r.p()},
                        {"dim", r.dim()},
                        {"vars", r.ambient().vars},
                        {"graded", true},
                        {"relations", rels}};
}

ordered_json ideal_json(const PolyRing& ring, const std::vector<Polynomial>& gens) {
    ordered_json out = ordered_json::array();
    for (const auto& g : gens) out.push_back(poly_to_string(ring, g));
    return out;
}

std::string verdict_name(Verdict v) { return v == Verdict::regular ? "regular" : "non-regular"; }

ordered_json run_ehk(const TaskSpec& spec) {
    QuotientRing r = build_ring(spec);
    IdealHandle i(r.ambient(), build_ideal_gens(spec, r.ambient()));
    LengthSequence seq = ehk_sequence(r, i, spec.n_max);
    ordered_json body;
    body["task"] = "ehk";
    body["ring"] = ring_json(r);
    body["ideal"] = ideal_json(r.ambient(), i.generators());
    body["sequences"] = ordered_json{{"ehk", sequence_json(seq)}};
    body["estimates"] = ordered_json{{"e_hk", estimate_json(extrapolate(seq))}};
    return body;
}

ordered_json run_tor(const TaskSpec& spec) {
    QuotientRing r = build_ring(spec);
    IdealHandle i(r.ambient(), build_ideal_gens(spec, r.ambient()));
    LengthSequence seq = ti_sequence(r, i, spec.i, spec.n_max);
    std::string key = "t" + std::to_string(spec.i);
    ordered_json body;
    body["task"] = "tor";
    body["ring"] = ring_json(r);
    body["ideal"] = ideal_json(r.ambient(), i.generators());
    body["i"] = spec.i;
    body["sequences"] = ordered_json{{"tor", sequence_json(seq)}};
    body["estimates"] = ordered_json{{key, estimate_json(extrapolate(seq))}};
    return body;
}

ordered_json run_kunz(const TaskSpec& spec) {
    QuotientRing r = build_ring(spec);
    bool reg = kunz_test(r);
    ordered_json body;
    body["task"] = "kunz";
    body["ring"] = ring_json(r);
    body["checks"] = ordered_json{{"kunz_regular", reg},
                                  {"verdict", reg ? "regular" : "non-regular"}};
    return body;
}

ordered_json run_check(const TaskSpec& spec) {
    QuotientRing r = build_ring(spec);
    IdealHandle i(r.ambient(), build_ideal_gens(spec, r.ambient()));
    RegularityReport rep = regularity_report(r, spec.n_max, spec.tol);
    std::vector<Exp> qs = spec.q_list;
    if (qs.empty()) {
        qs.push_back(r.p());
        Exp q2 = prime_power(r.p(), 2);
        qs.push_back(q2);
    }
    InequalitySuite suite = inequality_suite(r, i, spec.n_max, qs, spec.tol, std::max(spec.i, 1));

    ordered_json body;
    body["task"] = "check";
    body["ring"] = ring_json(r);
    body["ring"]["cm"] = suite.cm;
    body["ring"]["depth"] = suite.depth;
    body["ideal"] = ideal_json(r.ambient(), i.generators());
    body["sequences"] = ordered_json{{"ehk", sequence_json(rep.ehk_seq)},
                                     {"t1", sequence_json(rep.t1_seq)},
                                     {"t2", sequence_json(rep.t2_seq)}};
    body["estimates"] = ordered_json{{"e_hk", estimate_json(rep.e_hk)},
                                     {"t1", estimate_json(rep.t1)},
                                     {"t2", estimate_json(rep.t2)}};

    ordered_json rows = ordered_json::array();
    for (const auto& row : suite.rows) {
        rows.push_back(ordered_json{{"n", row.n},
                                    {"q", row.q},
                                    {"len_iq", row.len_iq},
                                    {"tor1_k", row.tor1_k},
                                    {"fn_riq", row.fn_riq},
                                    {"fn_k", row.fn_k},
                                    {"tor2_k", row.tor2_k},
                                    {"tor1_riq", row.tor1_riq},
                                    {"ineq1", row.ineq1},
                                    {"ineq2", row.ineq2}});
    }
    ordered_json alts = ordered_json::array();
    for (const auto& a : suite.alternating) {
        alts.push_back(ordered_json{{"i", a.i},
                                    {"value", rational_json(a.value)},
                                    {"holds", a.holds},
                                    {"informational", a.informational}});
    }
    body["checks"] = ordered_json{{"kunz_regular", rep.kunz_exact},
                                  {"verdict", verdict_name(rep.verdict)},
                                  {"t1_zero", check_json(rep.t1_zero)},
                                  {"t2_zero", check_json(rep.t2_zero)},
                                  {"ehk_t1_match", check_json(rep.ehk_t1_match)},
                                  {"limit_a", check_json(suite.limit_a)},
                                  {"limit_b", check_json(suite.limit_b)},
                                  {"inequalities", rows},
                                  {"alternating", alts}};
    return body;
}

ordered_json run_lemma(const TaskSpec& spec) {
    QuotientRing r = build_ring(spec);
    std::vector<Polynomial> sop = build_ideal_gens(spec, r.ambient());
    LemmaReport rep = lemma_check(r, sop, spec.n_max);
    ordered_json body;
    body["task"] = "lemma";
    body["ring"] = ring_json(r);
    body["ideal"] = ideal_json(r.ambient(), sop);
    body["sequences"] = ordered_json{{"tor1", sequence_json(rep.tor1)},
                                     {"koszul_h1", sequence_json(rep.koszul)}};
    ordered_json dom = ordered_json::array();
    for (bool b : rep.dominates) dom.push_back(b);
    body["checks"] = ordered_json{{"koszul_dominates_tor", dom},
                                  {"tor_trend_to_zero", rep.tor_trend},
                                  {"koszul_trend_to_zero", rep.koszul_trend}};
    return body;
}

ordered_json run_corollary(const TaskSpec& spec) {
    QuotientRing r = build_ring(spec);
    CorollaryReport rep = corollary_check(r, spec.n_max, spec.tol);
    ordered_json body;
    body["task"] = "corollary";
    body["ring"] = ring_json(r);
    body["ring"]["cm"] = rep.cm;
    body["ring"]["depth"] = rep.depth;
    body["multiplicity"] = rep.e;
    body["estimates"] = ordered_json{{"e_hk", estimate_json(rep.e_hk)},
                                     {"t1", estimate_json(rep.t1)}};
    body["checks"] = ordered_json{{"applicable", rep.applicable},
                                  {"bound", check_json(rep.bound)},
                                  {"implied_t1_floor", rational_json(rep.implied_t1_floor)}};
    return body;
}

ordered_json run_monomial_ehk(const TaskSpec& spec) {
    if (!spec.relations.empty())
        throw InputError("monomial-ehk runs over the polynomial ring; drop the relations line");
    PolyRing ring(spec.p, spec.vars);
    std::vector<Polynomial> gens = build_ideal_gens(spec, ring);
    std::vector<Monomial> mons;
    mons.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.nterms() != 1)
            throw InputError("monomial-ehk needs monomial generators, got '" +
                             poly_to_string(ring, g) + "'");
        mons.push_back(g.terms()[0].mon);
    }
    Rational v = monomial_ehk_exact(mons, ring.nvars());
    ordered_json body;
    body["task"] = "monomial-ehk";
    body["ring"] = ordered_json{{"p", ring.p()},
                                {"dim", ring.nvars()},
                                {"vars", ring.vars},
                                {"graded", true},
                                {"relations", ordered_json::array()}};
    body["ideal"] = ideal_json(ring, gens);
    body["estimates"] = ordered_json{{"e_hk_exact", rational_json(v)}};
    return body;
}

ordered_json run_bi_bound(const TaskSpec& spec) {
    QuotientRing r = build_ring(spec);
    std::vector<Polynomial> gens = build_ideal_gens(spec, r.ambient());
    FreeComplex c = spec.stages == 0
                        ? koszul_complex(r, gens)
                        : resolve_ideal(r, IdealHandle(r.ambient(), gens), spec.stages);
    auto [h1, tor1] = bi_surjection_bound(r, c, spec.n_max);
    ordered_json body;
    body["task"] = "bi-bound";
    body["ring"] = ring_json(r);
    body["ideal"] = ideal_json(r.ambient(), gens);
    body["complex"] = spec.stages == 0 ? "koszul" : "resolution";
    body["n"] = spec.n_max;
    body["checks"] = ordered_json{{"twisted_h1", h1},
                                  {"tor1", tor1},
                                  {"surjection_bound_holds", h1 >= tor1}};
    return body;
}

std::string pad(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

void render_table_array(std::ostringstream& out, const std::string& title,
                        const ordered_json& rows) {
    if (!rows.is_array() || rows.empty()) return;
    if (!rows[0].is_object()) {
        out << title << ":";
        for (const auto& v : rows)
            out << " " << (v.is_boolean() ? (v.get<bool>() ? "yes" : "no") : v.dump());
        out << "\n";
        return;
    }
    std::vector<std::string> cols;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    cells.push_back(cols);
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const auto& c : cols) {
            const auto& v = row.at(c);
            if (v.is_object() && v.contains("num")) {
                std::string s = std::to_string(v["num"].get<long long>());
                if (v["den"].get<long long>() != 1)
                    s += "/" + std::to_string(v["den"].get<long long>());
                line.push_back(s);
            } else if (v.is_boolean()) {
                line.push_back(v.get<bool>() ? "yes" : "no");
            } else {
                line.push_back(v.dump());
            }
        }
        cells.push_back(line);
    }
    std::vector<size_t> widths(cols.size(), 0);
    for (const auto& line : cells)
        for (size_t k = 0; k < line.size(); ++k) widths[k] = std::max(widths[k], line[k].size());
    out << title << "\n";
    for (const auto& line : cells) {
        out << "  ";
        for (size_t k = 0; k < line.size(); ++k) out << pad(line[k], widths[k] + 2);
        out << "\n";
    }
}

std::string scalar_text(const ordered_json& v) {
    if (v.is_object() && v.contains("num")) {
        std::string s = std::to_string(v["num"].get<long long>());
        if (v["den"].get<long long>() != 1) s += "/" + std::to_string(v["den"].get<long long>());
        std::ostringstream disp;
        disp << std::setprecision(6) << v["display"].get<double>();
        return s + " (" + disp.str() + ")";
    }
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string render_table(const ResultDocument& doc) {
    const ordered_json& b = doc.body;
    std::ostringstream out;
    out << "task: " << b.value("task", std::string("?")) << "\n";
    if (b.contains("ring")) {
        const auto& r = b["ring"];
        out << "ring: F_" << r["p"].get<long long>() << "[";
        const auto& vars = r["vars"];
        for (size_t k = 0; k < vars.size(); ++k) {
            if (k) out << ", ";
            out << vars[k].get<std::string>();
        }
        out << "]";
        const auto& rels = r["relations"];
        if (!rels.empty()) {
            out << " / (";
            for (size_t k = 0; k < rels.size(); ++k) {
                if (k) out << ", ";
                out << rels[k].get<std::string>();
            }
            out << ")";
        }
        out << "   dim " << r["dim"].get<long long>();
        if (r.contains("cm")) out << (r["cm"].get<bool>() ? "   CM" : "   not CM");
        out << "\n";
    }
    if (b.contains("ideal")) {
        out << "ideal: (";
        const auto& gens = b["ideal"];
        for (size_t k = 0; k < gens.size(); ++k) {
            if (k) out << ", ";
            out << gens[k].get<std::string>();
        }
        out << ")\n";
    }
    if (b.contains("sequences"))
        for (auto it = b["sequences"].begin(); it != b["sequences"].end(); ++it)
            render_table_array(out, "sequence " + it.key(), it.value());
    if (b.contains("estimates")) {
        out << "estimates\n";
        for (auto it = b["estimates"].begin(); it != b["estimates"].end(); ++it) {
            if (it.value().contains("richardson")) {
                out << "  " << pad(it.key(), 14)
                    << "richardson " << scalar_text(it.value()["richardson"])
                    << "   raw " << scalar_text(it.value()["raw_last"])
                    << "   err " << scalar_text(it.value()["error_indicator"]) << "\n";
            } else {
                out << "  " << pad(it.key(), 14) << scalar_text(it.value()) << "\n";
            }
        }
    }
    if (b.contains("multiplicity"))
        out << "multiplicity: " << b["multiplicity"].get<long long>() << "\n";
    if (b.contains("checks")) {
        out << "checks\n";
        size_t keyw = 0;
        for (auto it = b["checks"].begin(); it != b["checks"].end(); ++it)
            keyw = std::max(keyw, it.key().size());
        for (auto it = b["checks"].begin(); it != b["checks"].end(); ++it) {
            if (it.value().is_array()) {
                render_table_array(out, "  " + it.key(), it.value());
            } else if (it.value().is_object() && it.value().contains("holds")) {
                out << "  " << pad(it.key(), keyw + 2)
                    << (it.value()["holds"].get<bool>() ? "holds" : "FAILS")
                    << "   value " << scalar_text(it.value()["value"])
                    << "   tol " << it.value()["tol"].get<double>() << "\n";
            } else {
                out << "  " << pad(it.key(), keyw + 2) << scalar_text(it.value()) << "\n";
            }
        }
    }
    out << "time: " << std::fixed << std::setprecision(3) << doc.seconds << "s\n";
    return out.str();
}

}  // namespace

ResultDocument run_task(const TaskSpec& spec) {
    auto t0 = std::chrono::steady_clock::now();
    ResultDocument doc;
    if (spec.kind == "ehk") {
        doc.body = run_ehk(spec);
    } else if (spec.kind == "tor") {
        doc.body = run_tor(spec);
    } else if (spec.kind == "kunz") {
        doc.body = run_kunz(spec);
    } else if (spec.kind == "check") {
        doc.body = run_check(spec);
    } else if (spec.kind == "lemma") {
        doc.body = run_lemma(spec);
    } else if (spec.kind == "corollary") {
        doc.body = run_corollary(spec);
    } else if (spec.kind == "monomial-ehk") {
        doc.body = run_monomial_ehk(spec);
    } else if (spec.kind == "bi-bound") {
        doc.body = run_bi_bound(spec);
    } else {
        throw InputError("unknown task kind '" + spec.kind + "'");
    }
    doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return doc;
}

std::string emit(const ResultDocument& doc, const std::string& format) {
    if (format == "json") {
        ordered_json body = doc.body;
        body["timing"] = ordered_json{{"seconds", doc.seconds}};
        return body.dump(2) + "\n";
    }
    if (format == "table") return render_table(doc);
    throw InputError("unknown output format '" + format + "'");
}

}  // namespace hk
