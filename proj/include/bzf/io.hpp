#ifndef BZF_IO_HPP_
#define BZF_IO_HPP_

// Text and JSON forms shared by the library and the command line tool.
//
//   element   text "i,j,f"              JSON [i, j, f]
//   family                              JSON {"starts": [0, 1]}
//   endo      text "alpha:k,p@t"        JSON {"base": {"kind": "alpha", "k": 2, "p": 1}, "twist": 3}
//   map table                           JSON {"n": 4, "entries": [{"x": [0,0,0], "y": [0,0,0]}, ...]}
//   report                              JSON {"verdict": "fail", "kind": "homomorphism", "x": ..., "checks": ...}
//
// Every parser throws MalformedInput on bad input.

#include <string>       // for string
#include <string_view>  // for string_view

#include "json.hpp"

#include "bzf/core.hpp"
#include "bzf/morphisms.hpp"
#include "bzf/verify.hpp"

namespace bzf {

  Element parse_element(std::string_view text);

  //! Accepts "alpha:k,p@t" and "beta:k,p@t"; "@t" may be omitted for t = 0.
  //! \throws ParamOutOfRange if (k, p) is outside the base's range.
  CanonicalEndo parse_endo(std::string_view text);

  nlohmann::json to_json(Element const& x);
  nlohmann::json to_json(Family const& f);
  nlohmann::json to_json(CanonicalEndo const& e);
  nlohmann::json to_json(MapTable const& m);
  nlohmann::json to_json(Report const& r);

  Element       element_from_json(nlohmann::json const& j);
  Family        family_from_json(nlohmann::json const& j);
  CanonicalEndo endo_from_json(nlohmann::json const& j);
  MapTable      map_table_from_json(nlohmann::json const& j);

  //! Parses JSON text, converting parse errors to MalformedInput.
  nlohmann::json parse_json(std::string_view text);

}  // namespace bzf

#endif  // BZF_IO_HPP_
