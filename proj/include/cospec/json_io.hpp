#ifndef COSPEC_JSON_IO_HPP
#define COSPEC_JSON_IO_HPP

#include "cospec/classify.hpp"
#include "cospec/search.hpp"
#include "cospec/spectrum.hpp"
#include "cospec/verify.hpp"
#include "cospec/walks.hpp"

#include <json.hpp>

namespace cospec {

using Json = nlohmann::ordered_json;

// Coefficients are decimal strings, lowest power first.
Json to_json(const IntPolynomial& p);
Json to_json(const Inertia& in);
Json to_json(const SpectrumNumeric& s);
Json to_json(const PairReport& r);
Json to_json(const WalkProfile& w);

// Timing fields are omitted unless requested so repeated runs compare byte-equal.
Json to_json(const SearchResult& r, bool include_timing = false);
Json to_json(const SuiteReport& r, bool include_timing = false);

} // namespace cospec

#endif // COSPEC_JSON_IO_HPP
