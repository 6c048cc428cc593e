#pragma once

#include "kohnert/core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kohnert {

/// Every weak composition of length 1..max_length with parts 0..max_part,
/// optionally capped in total size, followed by the spot list.
struct SweepRange {
    int max_length = 4;
    int max_part = 3;
    std::optional<int> max_size;
    bool include_spots = true;
};

/// Compositions appearing in the worked figures.
const std::vector<Composition>& spot_compositions();

/// Range members in sweep order: by length, then lexicographically, then the
/// spot list minus anything already covered.
std::vector<Composition> compositions_in(const SweepRange& range);

struct Failure {
    Composition comp;
    std::string witness;
};

struct VerificationReport {
    std::string check;
    std::size_t tested = 0;
    std::vector<Failure> failures; // at most one per composition, sweep order
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }
};

/// A per-composition check returns a witness description on failure.
using Checker = std::function<std::optional<std::string>(const Composition&)>;

/// Runs `checker` over the range on `threads` workers (0 = hardware
/// concurrency).  Faults thrown by the checker are recorded as failures.
VerificationReport run_sweep(std::string_view name, const Checker& checker, const SweepRange& range,
                             unsigned threads = 0);

/// kappa_a - lock_a is monomial positive.
std::optional<std::string> check_positivity(const Composition& a);
/// Unlock is injective and weight preserving on LKT(a) with image in KKT(a),
/// and traces replay.
std::optional<std::string> check_injection(const Composition& a);
/// Unlock intertwines e_i and f_i wherever the lock operator is nonzero.
std::optional<std::string> check_intertwining(const Composition& a);
/// Both crystals are connected and their characters are the polynomials.
std::optional<std::string> check_connectivity(const Composition& a);
/// Polynomial-side symmetry and quasisymmetry match the shape-side rules;
/// Schur and lock = key identities on their domains.
std::optional<std::string> check_characterizations(const Composition& a);
/// Stepwise agreement of unlock with rectification, the truncation lemma,
/// crossing monotonicity and the left justification order.
std::optional<std::string> check_agreement(const Composition& a);
/// Labelings exist, are valid and are unique on both closures.
std::optional<std::string> check_labeling(const Composition& a);
/// Raise and lower are mutually inverse, move one box, and respect the
/// string lengths; rectification commutes with raising on diagrams.
std::optional<std::string> check_crystal(const Composition& a);
/// Pairing and M-statistic rectification agree on both closures.
std::optional<std::string> check_rectification(const Composition& a);

/// Names accepted by run_check, in "all" order.
const std::vector<std::string>& check_names();

/// One named check, or every check for "all".  Throws InvalidInput on an
/// unknown name.
std::vector<VerificationReport> run_check(std::string_view name, const SweepRange& range, unsigned threads = 0);

/// Fixed-width table, one line per report.
std::string format_summary(const std::vector<VerificationReport>& reports);

} // namespace kohnert
