#include "equidiv/pipeline.hpp"

#include "equidiv/error.hpp"

namespace equidiv {

DivideRun divide(const std::vector<Measure>& measures, int k, const Rational& epsilon, const DivideOptions& options) {
    if (k < 2) throw InputError("k must be at least 2");
    if (options.workers < 1) throw InputError("workers must be at least 1");
    DivideRun run;
    if (is_prime(k)) {
        PrimeDivision division = epsilon_divide(measures, k, epsilon, options);
        run.outcome.scheme = std::move(division.scheme);
        run.outcome.values = std::move(division.values);
        run.outcome.certificate =
            DivisionCertificate{epsilon, max_deviation(run.outcome.values), division.report.exact};
        run.report = std::move(division.report);
    } else {
        run.outcome = compose_division(measures, k, epsilon, options);
    }
    if (!verify_division(run.outcome.scheme, measures, epsilon)) {
        throw VerificationError("re-integration of the result exceeds epsilon");
    }
    return run;
}

}  // namespace equidiv
