#ifndef EKR_REPORT_HPP
#define EKR_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekr/extremal.hpp"
#include "ekr/families.hpp"
#include "ekr/stirling.hpp"

// JSON and CSV encodings of every report. Keys are emitted in a fixed order,
// big integers as decimal strings, reals rounded to 12 significant digits.
namespace ekr::report {

using Json = nlohmann::ordered_json;

/// `x` rounded to 12 significant digits, so the serialized text is stable.
Json real(double x);
std::string real_text(double x);

struct StirlingRecord {
  std::size_t n = 0, k = 0;
  BigNat value;
  std::optional<double> ratio;
};

StirlingRecord stirling_record(std::size_t n, std::size_t k, bool with_ratio);

Json to_json(const StirlingRecord &r);
Json to_json(const ConstantsEstimate &e);
Json to_json(const InequalityReport &r);
Json to_json(const CoverBoundReport &r);
/// Array of cycle-notation strings in member order.
Json to_json(const Family &f);
Json to_json(const TheoremReport &r, bool include_timing);
Json to_json(const ThresholdReport &r, bool include_timing);

/// Parses an array of cycle-notation strings. The ground set and k are taken
/// from the first member; an empty array yields an empty family over [n_hint]
/// with k_hint cycles.
Family family_from_json(const Json &j, std::size_t n_hint = 0,
                        std::size_t k_hint = 0);

void write_stirling_csv(std::ostream &out,
                        const std::vector<StirlingRecord> &rows);

std::string theorem_csv_header(bool include_timing);
std::string theorem_csv_row(const TheoremReport &r, bool include_timing);

} // namespace ekr::report

#endif // EKR_REPORT_HPP
