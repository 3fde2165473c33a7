#ifndef HSNUM_RECORDS_HPP_
#define HSNUM_RECORDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hsnum/hurwitz.hpp"
#include "hsnum/severi.hpp"

namespace hsnum {

enum class Format { Json, Csv, Md };

std::string_view to_string(Format f);
Format           parse_format(std::string_view name);

enum class Status { Ok, Empty, Unbendable, Degenerate, CapExceeded };

std::string_view to_string(Status s);

// One row of classify / hs / table output. hs is present iff status is Ok.
struct OutputRecord {
  SeveriTriple             triple;
  Classification           classification;
  long long                node_count = 0;
  Dimensions               dims{};
  std::optional<BigInt>    hurwitz;
  std::optional<Rational>  hs;
  Status                   status = Status::Ok;
  std::vector<std::string> warnings;
};

// Classifies t and, where a formula applies, evaluates its Hurwitz-Severi
// number through provider. CapExceeded is folded into the status;
// MethodDisagreement propagates.
OutputRecord make_record(SeveriTriple const& t, HurwitzProvider const& provider);

// Output of the hurwitz verb.
struct HurwitzRecord {
  int                       genus  = 0;
  int                       degree = 1;
  int                       transpositions = 0;
  BigInt                    h;
  Rational                  pairs;
  std::vector<EngineResult> engines;
  bool                      agree = true;
};

// Writes records in the requested format. JSON emits an array when
// as_array is set and a single object otherwise.
void write_records(std::ostream& out, std::vector<OutputRecord> const& records,
                   Format format, bool as_array);

void write_hurwitz(std::ostream& out, HurwitzRecord const& record,
                   Format format);

std::string csv_header();

}  // namespace hsnum

#endif  // HSNUM_RECORDS_HPP_
