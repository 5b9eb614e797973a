#include "hk/taskfile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace hk {

namespace {

const std::set<std::string> kKinds = {"ehk",   "tor",       "kunz",         "check",
                                      "lemma", "corollary", "monomial-ehk", "bi-bound"};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

long long parse_int(const std::string& s, const std::string& what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("bad integer for " + what + ": '" + s + "'");
    return v;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw Error("double formatting failed");
    return std::string(buf, ptr);
}

void parse_task_line(const std::string& rest, TaskSpec& spec) {
    std::istringstream in(rest);
    std::string tok;
    if (!(in >> tok)) throw InputError("empty task line");
    if (!kKinds.count(tok)) throw InputError("unknown task kind '" + tok + "'");
    spec.kind = tok;
    bool saw_i = false;
    while (in >> tok) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos) throw InputError("expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key == "n_max") {
            spec.n_max = static_cast<int>(parse_int(val, key));
            if (spec.n_max < 1) throw InputError("n_max must be at least 1");
        } else if (key == "i") {
            spec.i = static_cast<int>(parse_int(val, key));
            if (spec.i < 0) throw InputError("i must be nonnegative");
            saw_i = true;
        } else if (key == "tol") {
            try {
                size_t used = 0;
                spec.tol = std::stod(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw InputError("bad number for tol: '" + val + "'");
            }
            if (spec.tol < 0) throw InputError("tol must be nonnegative");
        } else if (key == "q_list") {
            spec.q_list.clear();
            for (const auto& piece : split_on(val, ',')) {
                Exp q = parse_int(piece, "q_list");
                if (q < 2) throw InputError("q must be at least 2");
                spec.q_list.push_back(q);
            }
        } else if (key == "stages") {
            spec.stages = static_cast<int>(parse_int(val, key));
            if (spec.stages < 0) throw InputError("stages must be nonnegative");
        } else {
            throw InputError("unknown task parameter '" + key + "'");
        }
    }
    // the alternating-sum depth has to reach 2 to cover both limit inequalities
    if (spec.kind == "check" && !saw_i) spec.i = 2;
}

}  // namespace

TaskSpec parse_taskfile(const std::string& text) {
    TaskSpec spec;
    bool saw_p = false, saw_vars = false, saw_task = false, saw_relations = false, saw_ideal = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string rest = trim(line.substr(colon + 1));

        if (key == "p") {
            if (saw_p) throw InputError("duplicate 'p:' line");
            long long v = parse_int(rest, "p");
            if (v < 2 || v > 0x7fffffff || !is_prime_u32(static_cast<uint32_t>(v)))
                throw InputError("p must be a prime, got '" + rest + "'");
            spec.p = static_cast<uint32_t>(v);
            saw_p = true;
        } else if (key == "vars") {
            if (saw_vars) throw InputError("duplicate 'vars:' line");
            spec.vars = split_names(rest);
            if (spec.vars.empty()) throw InputError("vars line declares no variables");
            for (const auto& v : spec.vars)
                if (!valid_name(v)) throw InputError("bad variable name '" + v + "'");
            saw_vars = true;
        } else if (key == "relations") {
            if (saw_relations) throw InputError("duplicate 'relations:' line");
            spec.relations = split_on(rest, ',');
            saw_relations = true;
        } else if (key == "ideal") {
            if (saw_ideal) throw InputError("duplicate 'ideal:' line");
            spec.ideal = split_on(rest, ',');
            saw_ideal = true;
        } else if (key == "task") {
            if (saw_task) throw InputError("duplicate 'task:' line");
            parse_task_line(rest, spec);
            saw_task = true;
        } else {
            throw InputError("unknown directive '" + key + "'");
        }
    }
    if (!saw_p) throw InputError("missing 'p:' line");
    if (!saw_vars) throw InputError("missing 'vars:' line");
    if (!saw_task) throw InputError("missing 'task:' line");

    // every polynomial must parse against the declared ring
    PolyRing ring(spec.p, spec.vars);
    for (const auto& s : spec.relations) (void)parse_polynomial(ring, s);
    for (const auto& s : spec.ideal) (void)parse_polynomial(ring, s);
    return spec;
}

std::string print_taskfile(const TaskSpec& spec) {
    std::ostringstream out;
    out << "p: " << spec.p << "\n";
    out << "vars:";
    for (const auto& v : spec.vars) out << " " << v;
    out << "\n";
    auto join = [](const std::vector<std::string>& xs) {
        std::string s;
        for (size_t k = 0; k < xs.size(); ++k) {
            if (k) s += ", ";
            s += xs[k];
        }
        return s;
    };
    if (!spec.relations.empty()) out << "relations: " << join(spec.relations) << "\n";
    if (!spec.ideal.empty()) out << "ideal: " << join(spec.ideal) << "\n";
    out << "task: " << spec.kind;
    out << " n_max=" << spec.n_max;
    out << " i=" << spec.i;
    out << " tol=" << format_double(spec.tol);
    if (!spec.q_list.empty()) {
        out << " q_list=";
        for (size_t k = 0; k < spec.q_list.size(); ++k) {
            if (k) out << ",";
            out << spec.q_list[k];
        }
    }
    out << " stages=" << spec.stages << "\n";
    return out.str();
}

QuotientRing build_ring(const TaskSpec& spec) {
    PolyRing ring(spec.p, spec.vars);
    std::vector<Polynomial> rels;
    rels.reserve(spec.relations.size());
    for (const auto& s : spec.relations) rels.push_back(parse_polynomial(ring, s));
    return QuotientRing(ring, std::move(rels));
}

std::vector<Polynomial> build_ideal_gens(const TaskSpec& spec, const PolyRing& ring) {
    std::vector<Polynomial> gens;
    if (spec.ideal.empty()) {
        for (int v = 0; v < ring.nvars(); ++v) gens.push_back(poly_variable(ring, v));
        return gens;
    }
    gens.reserve(spec.ideal.size());
    for (const auto& s : spec.ideal) gens.push_back(parse_polynomial(ring, s));
    return gens;
}

}  // namespace hk
