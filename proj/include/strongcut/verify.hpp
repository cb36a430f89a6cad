#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strongcut/formulas.hpp"
#include "strongcut/graph.hpp"
#include "strongcut/invariants.hpp"

namespace strongcut {

// Which exact solver(s) to run against the closed form.
enum class ExactMethod { flow, oracle, both };

enum class MatchState { matched, mismatched, skipped };

std::string exact_method_name(ExactMethod m);
std::optional<ExactMethod> exact_method_from_name(const std::string& name);
std::string match_state_name(MatchState s);  // "true" / "false" / "unknown"

// Deterministic factor-graph corpus. Trees are stars and brooms;
// near-regular graphs are balanced complete bipartite and cocktail party
// graphs; random graphs use a fixed generator so runs are reproducible.
struct CorpusSpec {
    bool paths = true;
    bool cycles = true;
    bool completes = true;
    bool trees = false;
    bool near_regular = false;
    int max_order = 5;
    int random_count = 0;
    std::uint64_t seed = 42;
};

std::vector<Graph> generate_corpus(const CorpusSpec& spec);

struct CheckOptions {
    ExactMethod method = ExactMethod::both;
    int enumeration_cap = kEnumerationCap;
    int product_order_cap = 20;
    // Added to every formula value before comparison; nonzero values let the
    // harness prove the comparison actually bites.
    int formula_offset = 0;
};

// Outcome of checking one (factor, family, n) instance.
struct VerificationRecord {
    std::string factor_id;
    Family family = Family::path;
    int n = 0;
    int formula_value = 0;
    std::optional<int> exact_value;
    ExactMethod exact_method = ExactMethod::both;
    MatchState match = MatchState::skipped;
    std::optional<Bipartition> witness;
    bool corollary_maximal_predicted = false;
    bool corollary_super_predicted = false;
    std::optional<bool> classified_maximal;
    std::optional<bool> classified_super;
    std::string note;
    double elapsed_ms = 0.0;
};

VerificationRecord check_theorem(const Graph& factor, Family family, int n,
                                 const CheckOptions& options = {});

// Default n values exercised per family when the caller does not pin them.
std::vector<int> default_n_values(Family f);

struct SweepSummary {
    int total = 0;
    int matched = 0;
    int mismatched = 0;
    int skipped = 0;
};

struct SweepResult {
    std::vector<VerificationRecord> records;
    SweepSummary summary;
};

// Checks every corpus factor against every requested family and n value.
// Work items are fixed up front and results land in preassigned slots, so
// the output is identical for any thread count.
SweepResult sweep(const std::vector<Graph>& corpus, const std::vector<Family>& families,
                  const std::vector<int>& n_values, const CheckOptions& options = {},
                  int threads = 1);

nlohmann::json record_to_json(const VerificationRecord& r);
std::string to_jsonl(const std::vector<VerificationRecord>& records);

extern const char* const kCsvHeader;
std::string to_csv(const std::vector<VerificationRecord>& records);

}  // namespace strongcut
