#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhv/hhcore.hpp"

namespace hhv {

// One generated test case. Inclusion requires f itself to shape-check convex
// on iv; the derivative tags record which bound hypotheses the case can
// exercise.
struct CorpusCase {
    FuncExpr f;
    Interval iv;
    std::string text;            // printed form of f, for reproduction
    bool fprime_convex = false;  // |f'| convex on iv
    bool fprime_concave = false;
};

struct GenStats {
    int drawn = 0;
    int rejected_not_convex = 0;
    int fprime_convex = 0;  // accepted cases whose |f'| gate passed
    int fprime_concave = 0;
};

struct Corpus {
    std::uint64_t seed = 0;
    int count = 0;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<CorpusCase> cases;
    GenStats stats;
};

// Draws `count` cases: f is a positive combination of convex basis pieces
// (x^n for n in 2..5, 1/x, -ln x, exp(cx) with c in [0.2,1], x ln x) plus an
// affine term, over an interval with lo < a < b < hi. Candidates that fail
// the convexity check are redrawn and counted. Deterministic per seed.
Corpus gen_corpus(std::uint64_t seed, int count, double lo, double hi,
                  const Tolerances& tol = {});

struct Violation {
    int case_index = -1;
    std::string check;  // e.g. "lemma_identity", "T2(q=2)", "hadamard"
    double lhs = 0.0;
    double bound = 0.0;
    double excess = 0.0;  // how far past bound + slack
};

struct Skip {
    int case_index = -1;
    std::string reason;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::string config_digest;
    int cases = 0;
    int checks = 0;
    std::vector<Violation> violations;
    std::vector<Skip> skips;
};

// Per case: lemma identity, every bound from bound_report under its shape
// gate, and the Hadamard double inequality. A check only counts against the
// suite when its precondition passed and the inequality still failed beyond
// slack. Case order is corpus order, so the report is deterministic.
SuiteReport run_suite(const Corpus& corpus, const std::vector<double>& q_list,
                      const Tolerances& tol = {});

// FNV-1a 64 of an arbitrary string, as 16 hex digits.
std::string fnv_digest(const std::string& s);

// Digest of the generation + run configuration, embedded in reports so a
// verdict names the exact setup that produced it.
std::string config_digest(const Corpus& corpus, const std::vector<double>& q_list,
                          const Tolerances& tol);

}  // namespace hhv
