#include "subring/formulas.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "subring/recursion.hpp"
#include "subring/util.hpp"

#include "formula_table_data.hpp"

namespace subring {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        out.push_back(trim(cur));
    return out;
}

BinomPoly parse_binom_poly(const std::string& text) {
    BinomPoly bp;
    for (const std::string& seg : split(text, ';')) {
        if (seg.empty())
            continue;
        size_t lb = seg.find('[');
        size_t rb = seg.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw std::invalid_argument("binomial term without [k]: '" + seg + "'");
        int k = std::stoi(seg.substr(lb + 1, rb - lb - 1));
        PolynomialQ c = parse_poly_expr(trim(seg.substr(rb + 1)), "p", {});
        for (auto& t : bp.terms)
            if (t.first == k)
                throw std::invalid_argument("duplicate binomial index k=" + std::to_string(k));
        bp.terms.emplace_back(k, std::move(c));
    }
    std::sort(bp.terms.begin(), bp.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return bp;
}

} // namespace

std::optional<SymbolEnv> match_pattern(const std::string& pattern, const Composition& alpha) {
    const auto& a = alpha.parts;
    const int len = alpha.length();
    SymbolEnv env;
    env["n"] = len + 1;
    env["len"] = len;

    auto ones_between = [&](int lo, int hi) { // 1-based, inclusive
        for (int i = lo; i <= hi; ++i)
            if (a[i - 1] != 1)
                return false;
        return true;
    };
    // positions (1-based) of parts != 1
    std::vector<int> big;
    for (int i = 1; i <= len; ++i)
        if (a[i - 1] != 1)
            big.push_back(i);

    if (pattern == "head-ones") {
        // (beta, 1, ..., 1)
        if (!ones_between(2, len))
            return std::nullopt;
        env["beta"] = a[0];
        return env;
    }
    if (pattern == "two-ones-b-ones") {
        // (2, 1..1, beta, 1..1), beta at position k >= 2
        if (a[0] != 2 || big.size() != 2 || big[0] != 1)
            return std::nullopt;
        int k = big[1];
        env["beta"] = a[k - 1];
        env["k"] = k;
        env["r"] = len - k;
        return env;
    }
    if (pattern == "b-ones-g") {
        // (beta, 1..1, gamma), length >= 3
        if (len < 3 || !ones_between(2, len - 1))
            return std::nullopt;
        env["beta"] = a[0];
        env["gamma"] = a[len - 1];
        return env;
    }
    if (pattern == "two-ones-two-ones-b") {
        // (2, 1..1, 2, 1..1, beta): non-ones exactly at 1, k, len
        if (len < 3 || a[0] != 2 || big.size() != 3 || big[0] != 1 || big[2] != len)
            return std::nullopt;
        int k = big[1];
        if (a[k - 1] != 2)
            return std::nullopt;
        env["beta"] = a[len - 1];
        env["k"] = k;
        env["r"] = len - k;
        return env;
    }
    if (pattern == "two-ones-two-ones-b-one") {
        // (2, 1..1, 2, 1..1, beta, 1)
        if (len < 4 || a[0] != 2 || a[len - 1] != 1)
            return std::nullopt;
        if (big.size() != 3 || big[0] != 1 || big[2] != len - 1)
            return std::nullopt;
        int k = big[1];
        if (a[k - 1] != 2 || k > len - 2)
            return std::nullopt;
        env["beta"] = a[len - 2];
        env["k"] = k;
        env["r"] = len - k;
        return env;
    }
    if (pattern == "two-ones-three-ones-two") {
        // (2, 1..1, 3, 1..1, 2)
        if (len < 3 || a[0] != 2 || a[len - 1] != 2)
            return std::nullopt;
        if (big.size() != 3 || big[0] != 1 || big[2] != len)
            return std::nullopt;
        int k = big[1];
        if (a[k - 1] != 3)
            return std::nullopt;
        env["k"] = k;
        env["r"] = len - k;
        return env;
    }
    throw std::invalid_argument("unknown family pattern '" + pattern + "'");
}

FormulaTable FormulaTable::parse(const std::string& text) {
    FormulaTable t;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto bad = [&](const std::string& msg) {
        throw std::invalid_argument("formula table line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#')
            continue;
        auto fields = split(s, '|');
        const std::string& kind = fields[0];
        if (kind == "version") {
            if (fields.size() != 2)
                bad("version needs one field");
            t.version_ = std::stoi(fields[1]);
        } else if (kind == "family") {
            if (fields.size() != 5)
                bad("family needs id|pattern|guard|value");
            FormulaEntry e;
            e.kind = EntryKind::FamilyG;
            e.id = "g-fam:" + fields[1];
            e.pattern = fields[2];
            e.guard = fields[3];
            e.value = fields[4];
            match_pattern(e.pattern, Composition({2, 1})); // validates the pattern name
            t.entries_.push_back(std::move(e));
        } else if (kind == "g") {
            if (fields.size() != 3)
                bad("g needs composition|polynomial");
            FormulaEntry e;
            e.kind = EntryKind::FixedG;
            std::string comp = fields[1];
            if (comp.size() < 2 || comp.front() != '(' || comp.back() != ')')
                bad("composition must look like (2,3,2,2)");
            e.alpha = parse_composition(comp.substr(1, comp.size() - 2));
            e.id = "g:" + e.alpha.str();
            e.poly = parse_poly_expr(fields[2], "p", {});
            t.entries_.push_back(std::move(e));
        } else if (kind == "f") {
            if (fields.size() != 3)
                bad("f needs e|binomial terms");
            FormulaEntry e;
            e.kind = EntryKind::FBinom;
            if (fields[1] == "9mg") {
                e.e = 9;
                e.id = "f:e=9-minus-gamma";
            } else {
                e.e = std::stoi(fields[1]);
                e.id = "f:e=" + std::to_string(e.e);
            }
            e.binom = parse_binom_poly(fields[2]);
            t.entries_.push_back(std::move(e));
        } else if (kind == "gn" || kind == "gn6m") {
            if (fields.size() != 4)
                bad(kind + " needs n|e|polynomial");
            FormulaEntry e;
            e.kind = (kind == "gn") ? EntryKind::GnPoly : EntryKind::Gn6MinusG32211;
            e.n = std::stoi(fields[1]);
            e.e = std::stoi(fields[2]);
            e.id = (kind == "gn" ? "gn:" : "gn6m:") + std::to_string(e.n) + ":" + std::to_string(e.e);
            e.poly = parse_poly_expr(fields[3], "p", {});
            t.entries_.push_back(std::move(e));
        } else if (kind == "conj") {
            if (fields.size() != 3)
                bad("conj needs id|polynomial");
            FormulaEntry e;
            e.kind = EntryKind::Conjecture;
            e.id = "conj:" + fields[1];
            e.poly = parse_poly_expr(fields[2], "p", {});
            t.entries_.push_back(std::move(e));
        } else {
            bad("unknown entry kind '" + kind + "'");
        }
    }
    return t;
}

FormulaTable FormulaTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open formula table '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse(os.str());
}

const FormulaTable& FormulaTable::builtin() {
    static const FormulaTable table = parse(detail::kFormulaTableText);
    return table;
}

const FormulaEntry* FormulaTable::find(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id)
            return &e;
    return nullptr;
}

const FormulaEntry* FormulaTable::fixed_g(const Composition& alpha) const {
    for (const auto& e : entries_)
        if (e.kind == EntryKind::FixedG && e.alpha == alpha)
            return &e;
    return nullptr;
}

const FormulaEntry* FormulaTable::family_for(const Composition& alpha) const {
    const FormulaEntry* found = nullptr;
    for (const auto& e : entries_) {
        if (e.kind != EntryKind::FamilyG)
            continue;
        auto env = match_pattern(e.pattern, alpha);
        if (!env || !eval_guard(e.guard, *env))
            continue;
        if (found)
            throw std::logic_error("two families claim " + alpha.str() + ": " + found->id + " and " + e.id);
        found = &e;
    }
    return found;
}

mpz_class FormulaTable::eval_g(const FormulaEntry& entry, const Composition& alpha,
                               const mpz_class& p) const {
    if (entry.kind == EntryKind::FixedG) {
        if (!(entry.alpha == alpha))
            throw GuardError("entry " + entry.id + " does not apply to alpha=" + alpha.str());
        return entry.poly.eval_z(p);
    }
    if (entry.kind != EntryKind::FamilyG)
        throw std::invalid_argument("entry " + entry.id + " is not a g formula");
    auto env = match_pattern(entry.pattern, alpha);
    if (!env)
        throw GuardError("alpha=" + alpha.str() + " does not match the shape of " + entry.id);
    if (auto violated = guard_violation(entry.guard, *env))
        throw GuardError(entry.id + " requires " + *violated);
    return parse_poly_expr(entry.value, "p", *env).eval_z(p);
}

mpz_class FormulaTable::eval_f_closed(int e, long n, const mpz_class& p) const {
    const FormulaEntry* entry = find("f:e=" + std::to_string(e));
    if (!entry)
        throw GuardError("no closed form for f at e=" + std::to_string(e));
    if (e == 5 && n > 6)
        throw GuardError("the e=5 closed form is displayed only through binom(n,6); n <= 6 required");
    return entry->binom.eval(n, p);
}

mpz_class FormulaTable::eval_f9_minus_gamma(long n, const mpz_class& p) const {
    if (n < 2)
        throw GuardError("n >= 2 required");
    const FormulaEntry* entry = find("f:e=9-minus-gamma");
    if (!entry)
        throw std::logic_error("table is missing the f:e=9-minus-gamma entry");
    return entry->binom.eval(n, p);
}

const PolynomialQ& FormulaTable::gn_poly(int n, int e) const {
    const FormulaEntry* entry = find("gn:" + std::to_string(n) + ":" + std::to_string(e));
    if (!entry)
        throw std::invalid_argument("no g_n display for n=" + std::to_string(n) + ", e=" + std::to_string(e));
    return entry->poly;
}

const PolynomialQ& FormulaTable::gn6_minus_g32211() const {
    const FormulaEntry* entry = find("gn6m:6:9");
    if (!entry)
        throw std::logic_error("table is missing the gn6m entry");
    return entry->poly;
}

const PolynomialQ& FormulaTable::conjecture(const std::string& id) const {
    const FormulaEntry* entry = find("conj:" + id);
    if (!entry)
        throw std::invalid_argument("no conjecture entry '" + id + "'");
    return entry->poly;
}

mpz_class gamma_term(long n, const mpz_class& p, const mpz_class& g32211) {
    (void)p;
    return binomial(n, 6) * g32211;
}

mpz_class eval_formula(const std::string& id, const mpz_class& p, std::optional<long> n,
                       std::optional<Composition> alpha) {
    const FormulaTable& table = FormulaTable::builtin();
    const FormulaEntry* entry = table.find(id);
    if (!entry)
        throw std::invalid_argument("no formula entry '" + id + "'");
    switch (entry->kind) {
    case EntryKind::FixedG:
        return table.eval_g(*entry, alpha ? *alpha : entry->alpha, p);
    case EntryKind::FamilyG:
        if (!alpha)
            throw std::invalid_argument("family entry needs alpha");
        return table.eval_g(*entry, *alpha, p);
    case EntryKind::FBinom:
        if (!n)
            throw std::invalid_argument("f entry needs n");
        if (entry->id == "f:e=9-minus-gamma")
            return table.eval_f9_minus_gamma(*n, p);
        return table.eval_f_closed(entry->e, *n, p);
    case EntryKind::GnPoly:
    case EntryKind::Gn6MinusG32211:
    case EntryKind::Conjecture:
        return entry->poly.eval_z(p);
    }
    throw std::logic_error("unreachable");
}

// ------------------------------------------------------------------ verify

namespace {

void push_check(VerifyReport& report, std::string id, std::string params, const mpz_class& expected,
                const std::function<mpz_class()>& compute) {
    VerifyRow row;
    row.entry_id = std::move(id);
    row.params = std::move(params);
    row.expected = expected.get_str();
    try {
        mpz_class actual = compute();
        row.actual = actual.get_str();
        row.status = (actual == expected) ? VerifyStatus::PASS : VerifyStatus::FAIL;
    } catch (const BudgetError& e) {
        row.status = VerifyStatus::REFUSED;
        row.note = e.what();
        ++report.refusals;
    }
    if (row.status == VerifyStatus::FAIL)
        ++report.failures;
    report.rows.push_back(std::move(row));
}

// every composition of weight <= 9 that some family covers
std::vector<Composition> family_instances(const FormulaTable& table) {
    std::vector<Composition> out;
    for (int w = 2; w <= 9; ++w)
        for (int len = 1; len <= w; ++len)
            for (const auto& alpha : compositions(w, len))
                if (table.family_for(alpha))
                    out.push_back(alpha);
    return out;
}

} // namespace

VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opt) {
    const FormulaTable& table = FormulaTable::builtin();
    VerifyReport report;
    report.suite = suite;

    if (suite == "theorem1.2") {
        for (int64_t p : opt.primes) {
            std::map<std::pair<int, int>, mpz_class> gmemo;
            auto g = [&, p](int j, int i) -> mpz_class {
                auto key = std::make_pair(j, i);
                auto it = gmemo.find(key);
                if (it == gmemo.end())
                    it = gmemo.emplace(key, count_g_n(j, i, p, opt.enum_opts)).first;
                return it->second;
            };
            for (int e = 0; e <= 5; ++e)
                for (int n = 2; n <= opt.n_max; ++n) {
                    if (e == 5 && n > 6)
                        continue; // display truncated past binom(n,6)
                    mpz_class expected = table.eval_f_closed(e, n, mpz_class(p));
                    push_check(report, "f:e=" + std::to_string(e),
                               "n=" + std::to_string(n) + " p=" + std::to_string(p), expected,
                               [&, n, e, p] { return f_prime_power(n, e, p, g); });
                }
        }
    } else if (suite == "section4-6-tables") {
        for (int64_t p : opt.primes) {
            for (const auto& entry : table.entries()) {
                if (entry.kind != EntryKind::FixedG)
                    continue;
                mpz_class expected = entry.poly.eval_z(p);
                push_check(report, entry.id, "p=" + std::to_string(p), expected,
                           [&] { return count_g_alpha(entry.alpha, p, opt.enum_opts); });
            }
            for (const auto& alpha : family_instances(table)) {
                const FormulaEntry* fam = table.family_for(alpha);
                mpz_class expected = table.eval_g(*fam, alpha, mpz_class(p));
                push_check(report, fam->id, "alpha=" + alpha.str() + " p=" + std::to_string(p),
                           expected, [&] { return count_g_alpha(alpha, p, opt.enum_opts); });
            }
        }
    } else if (suite == "prop7.1") {
        for (int64_t p : opt.primes) {
            for (int n : {3, 4, 5}) {
                mpz_class expected = table.gn_poly(n, 9).eval_z(p);
                push_check(report, "gn:" + std::to_string(n) + ":9", "p=" + std::to_string(p),
                           expected, [&, n, p] { return count_g_n(n, 9, p, opt.enum_opts); });
            }
            mpz_class expected = table.gn6_minus_g32211().eval_z(p);
            push_check(report, "gn6m:6:9", "p=" + std::to_string(p), expected, [&, p]() -> mpz_class {
                mpz_class g6 = count_g_n(6, 9, p, opt.enum_opts);
                mpz_class g32211 = count_g_alpha(Composition({3, 2, 2, 1, 1}), p, opt.enum_opts);
                return g6 - g32211;
            });
        }
    } else if (suite == "theorem-main") {
        for (int64_t p : opt.primes) {
            mpz_class g32211;
            try {
                g32211 = count_g_alpha(Composition({3, 2, 2, 1, 1}), p, opt.enum_opts);
            } catch (const BudgetError& e) {
                VerifyRow row;
                row.entry_id = "f:e=9-minus-gamma";
                row.params = "p=" + std::to_string(p);
                row.status = VerifyStatus::REFUSED;
                row.note = e.what();
                ++report.refusals;
                report.rows.push_back(std::move(row));
                continue;
            }
            std::map<std::pair<int, int>, mpz_class> gmemo;
            auto g = [&, p](int j, int i) -> mpz_class {
                auto key = std::make_pair(j, i);
                auto it = gmemo.find(key);
                if (it == gmemo.end())
                    it = gmemo.emplace(key, count_g_n(j, i, p, opt.enum_opts)).first;
                return it->second;
            };
            for (int n = 2; n <= opt.n_max; ++n) {
                mpz_class expected =
                    table.eval_f9_minus_gamma(n, mpz_class(p)) + gamma_term(n, mpz_class(p), g32211);
                push_check(report, "f:e=9-minus-gamma",
                           "n=" + std::to_string(n) + " p=" + std::to_string(p), expected,
                           [&, n, p] { return f_prime_power(n, 9, p, g); });
            }
        }
    } else {
        throw std::invalid_argument("unknown verify suite '" + suite + "'");
    }
    return report;
}

} // namespace subring
