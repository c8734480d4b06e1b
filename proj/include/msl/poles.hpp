#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msl/multisegment.hpp"
#include "msl/pi_module.hpp"

namespace msl {

enum class Method { speh, matching, oracle };

std::string to_string(Method m);

/// Thrown when a forced backend's hypothesis does not hold for the input.
class MethodPreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CrossCheck {
    std::string name;
    bool passed;
};

/// Pole orders of the ordered pair (m, n): lambda_Z for the Z-parametrized
/// pair, lambda_L for the L-parametrized one, lambda_nr after normalization.
/// Invariants: frak_d = lambda_Z + lambda_L + alpha >= 0 and
/// lambda_nr = lambda_L - alpha_plus.
struct PoleReport {
    std::int64_t lambda_Z = 0;
    std::int64_t lambda_L = 0;
    std::int64_t lambda_nr = 0;
    std::int64_t alpha = 0;
    std::int64_t alpha_plus = 0;
    std::int64_t frak_d = 0;
    Method method = Method::oracle;
    std::vector<CrossCheck> crosschecks;

    /// Failed verdicts, ignoring the informational "theorem_backed" entry.
    std::vector<std::string> disagreements() const;
};

/// Backend choice: closed form when both inputs are Speh, matching when
/// either is a ladder, sampling oracle otherwise.
Method dispatch_method(const Multisegment& m, const Multisegment& n);

/// True when one of m, n, m*, n* is regular and balanced; in that range the
/// hom identification of the pole order is a theorem, beyond it outputs are
/// the exact hom dimensions under a conjectural identification.
bool theorem_hypothesis(const Multisegment& m, const Multisegment& n);

std::int64_t lambda_L(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);
std::int64_t lambda_Z(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);
std::int64_t lambda_nr(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);
std::int64_t frak_d(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg);

/// Closed forms for a pair of Speh multisegments; throw
/// MethodPreconditionError otherwise.
std::int64_t speh_lambda(const Multisegment& m, const Multisegment& n);
std::int64_t speh_lambda_nr(const Multisegment& m, const Multisegment& n);

/// Full evaluation of a pair. With check = true every applicable backend
/// runs and the agreement verdicts land in crosschecks; a forced method
/// must satisfy its hypothesis.
PoleReport compute_report(const Multisegment& m, const Multisegment& n, const SampleConfig& cfg,
                          bool check = false, std::optional<Method> forced = std::nullopt);

std::string report_to_json(const PoleReport& r);

// The golden self-commuting non-rigid example and its ladder factors.
Multisegment leclerc_multisegment();
std::pair<Multisegment, Multisegment> leclerc_factors();

/// Battery around the golden example: pole order 2, vanishing frak_d,
/// strong self-commutation without rigidity, and hom additivity against
/// seeded random multisegments. Verdicts are appended to the first
/// report's crosschecks.
std::vector<PoleReport> leclerc_suite(const SampleConfig& cfg, int additivity_count = 50);

/// Multisegments spread over labeled cuspidal lines. Pole quantities add
/// across lines; cross-line contributions vanish.
using LineMap = std::map<std::string, Multisegment>;

std::int64_t lambda_Z_lines(const LineMap& m, const LineMap& n, const SampleConfig& cfg);
std::int64_t lambda_L_lines(const LineMap& m, const LineMap& n, const SampleConfig& cfg);
std::int64_t lambda_nr_lines(const LineMap& m, const LineMap& n, const SampleConfig& cfg);
std::int64_t alpha_lines(const LineMap& m, const LineMap& n);
std::int64_t frak_d_lines(const LineMap& m, const LineMap& n, const SampleConfig& cfg);

}  // namespace msl
