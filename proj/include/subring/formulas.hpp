#pragma once
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subring/composition.hpp"
#include "subring/enumerate.hpp"
#include "subring/expr.hpp"
#include "subring/polynomial.hpp"

namespace subring {

enum class EntryKind { FixedG, FamilyG, FBinom, GnPoly, Gn6MinusG32211, Conjecture };

struct FormulaEntry {
    std::string id;
    EntryKind kind = EntryKind::FixedG;

    Composition alpha;   // FixedG
    PolynomialQ poly;    // FixedG, GnPoly, Gn6MinusG32211, Conjecture
    std::string pattern; // FamilyG
    std::string guard;   // FamilyG
    std::string value;   // FamilyG expression source
    int e = -1;          // FBinom (e; 9 for the 9mg entry), GnPoly
    int n = -1;          // GnPoly
    BinomPoly binom;     // FBinom
};

// Shape match of a composition against one of the family patterns; yields
// the symbol bindings (n, beta, gamma, k, r) used by guards and values.
std::optional<SymbolEnv> match_pattern(const std::string& pattern, const Composition& alpha);

class FormulaTable {
public:
    // Parses the pipe-separated table format; throws std::invalid_argument
    // naming the offending line.
    static FormulaTable parse(const std::string& text);
    static FormulaTable load_file(const std::string& path);
    // The copy embedded at build time from data/formula_table.txt.
    static const FormulaTable& builtin();

    int version() const { return version_; }
    const std::vector<FormulaEntry>& entries() const { return entries_; }
    const FormulaEntry* find(const std::string& id) const;

    const FormulaEntry* fixed_g(const Composition& alpha) const;
    // The unique applicable family (pattern matches and guard holds), if any.
    const FormulaEntry* family_for(const Composition& alpha) const;

    // Closed-form g_alpha(p) for a fixed entry or a family instance.
    // Guard violations raise GuardError naming the failed hypothesis.
    mpz_class eval_g(const FormulaEntry& entry, const Composition& alpha, const mpz_class& p) const;

    // f_n(p^e) closed form, e <= 5. The e = 5 display is complete only for
    // n <= 6; larger n raises GuardError.
    mpz_class eval_f_closed(int e, long n, const mpz_class& p) const;

    // The 17-term binomial polynomial equal to f_n(p^9) - gamma(n,p).
    mpz_class eval_f9_minus_gamma(long n, const mpz_class& p) const;

    const PolynomialQ& gn_poly(int n, int e) const;          // g_n(p^e) displays
    const PolynomialQ& gn6_minus_g32211() const;             // g_6(p^9) - g_(3,2,2,1,1)(p)
    const PolynomialQ& conjecture(const std::string& id) const;

private:
    int version_ = 0;
    std::vector<FormulaEntry> entries_;
};

// gamma(n,p) = (sum_{k=2}^{n} binom(k-1,5)) * g_(3,2,2,1,1)(p); the sum
// collapses to binom(n,6) by the hockey-stick identity.
mpz_class gamma_term(long n, const mpz_class& p, const mpz_class& g32211);

// Spec'd convenience: evaluate a table entry by id with explicit bindings.
mpz_class eval_formula(const std::string& id, const mpz_class& p,
                       std::optional<long> n = std::nullopt,
                       std::optional<Composition> alpha = std::nullopt);

// ---------------------------------------------------------------- verifier

enum class VerifyStatus { PASS, FAIL, REFUSED };

struct VerifyRow {
    std::string entry_id;
    std::string params;   // human-readable bindings, e.g. "alpha=(2,3,2,2) p=5"
    std::string expected; // decimal, empty when refused
    std::string actual;
    VerifyStatus status;
    std::string note;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;
    int failures = 0;
    int refusals = 0;
    bool all_passed() const { return failures == 0; }
};

struct VerifyOptions {
    std::vector<int64_t> primes = {2, 3};
    int n_max = 6;
    EnumerateOptions enum_opts;
};

// Suites: "theorem1.2" (f_n(p^e) closed forms, e <= 5),
// "section4-6-tables" (every fixed g entry plus all family instances of
// weight <= 9), "prop7.1" (the g_n(p^9) displays), "theorem-main" (the
// f_n(p^9) identity). Budget refusals are recorded per row, never fatal.
VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opt = {});

} // namespace subring
