#include "bzf/io.hpp"

#include <charconv>  // for from_chars
#include <limits>    // for numeric_limits

#include "bzf/errors.hpp"

namespace bzf {

  using nlohmann::json;

  namespace {
    std::int64_t parse_int(std::string_view text, std::string_view what) {
      std::int64_t value = 0;
      auto const*  first = text.data();
      auto const*  last  = text.data() + text.size();
      if (!text.empty() && text.front() == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (text.empty() || ec != std::errc() || ptr != last) {
        throw MalformedInput("cannot parse " + std::string(what) + " from \""
                             + std::string(text) + "\"");
      }
      return value;
    }

    std::uint32_t to_index(std::int64_t f) {
      if (f < 0 || f > std::numeric_limits<std::uint32_t>::max()) {
        throw MalformedInput("tail index " + std::to_string(f) + " is out of range");
      }
      return static_cast<std::uint32_t>(f);
    }

    std::int64_t json_int(json const& j, char const* what) {
      if (!j.is_number_integer()) {
        throw MalformedInput(std::string("expected an integer for ") + what
                             + ", found " + j.dump());
      }
      return j.get<std::int64_t>();
    }

    json const& member(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw MalformedInput(std::string("missing key \"") + key + "\" in "
                             + j.dump());
      }
      return j.at(key);
    }
  }  // namespace

  Element parse_element(std::string_view text) {
    auto const c1 = text.find(',');
    auto const c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw MalformedInput("element must be \"i,j,f\", found \"" + std::string(text)
                           + "\"");
    }
    return {parse_int(text.substr(0, c1), "i"),
            parse_int(text.substr(c1 + 1, c2 - c1 - 1), "j"),
            to_index(parse_int(text.substr(c2 + 1), "f"))};
  }

  CanonicalEndo parse_endo(std::string_view text) {
    auto const colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw MalformedInput("endomorphism must be \"alpha:k,p@t\" or \"beta:k,p@t\", found \""
                           + std::string(text) + "\"");
    }
    std::string_view const kind = text.substr(0, colon);
    std::string_view       rest = text.substr(colon + 1);

    std::int64_t twist = 0;
    if (auto const at = rest.find('@'); at != std::string_view::npos) {
      twist = parse_int(rest.substr(at + 1), "twist");
      rest  = rest.substr(0, at);
    }
    auto const comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw MalformedInput("endomorphism parameters must be \"k,p\", found \""
                           + std::string(rest) + "\"");
    }
    std::int64_t const k = parse_int(rest.substr(0, comma), "k");
    std::int64_t const p = parse_int(rest.substr(comma + 1), "p");
    if (kind == "alpha") {
      return {make_alpha(k, p), twist};
    }
    if (kind == "beta") {
      return {make_beta(k, p), twist};
    }
    throw MalformedInput("unknown endomorphism kind \"" + std::string(kind) + "\"");
  }

  json to_json(Element const& x) {
    return json::array({x.i, x.j, x.f});
  }

  json to_json(Family const& f) {
    return json{{"starts", f.starts()}};
  }

  json to_json(CanonicalEndo const& e) {
    return json{{"base",
                 {{"kind", to_string(e.base.kind())},
                  {"k", e.base.k()},
                  {"p", e.base.p()}}},
                {"twist", e.twist}};
  }

  json to_json(MapTable const& m) {
    json entries = json::array();
    for (auto const& [x, y] : m.entries()) {
      entries.push_back({{"x", to_json(x)}, {"y", to_json(y)}});
    }
    return json{{"n", m.n()}, {"entries", std::move(entries)}};
  }

  json to_json(Report const& r) {
    json out;
    if (!r.name.empty()) {
      out["name"] = r.name;
    }
    out["verdict"] = r.passed() ? "pass" : "fail";
    if (r.counterexample) {
      auto const& c = *r.counterexample;
      out["kind"]   = to_string(c.kind);
      if (!c.stage.empty()) {
        out["stage"] = c.stage;
      }
      out["x"] = to_json(c.x);
      if (c.y) {
        out["y"] = to_json(*c.y);
      }
      if (c.z) {
        out["z"] = to_json(*c.z);
      }
      if (c.lhs) {
        out["lhs"] = to_json(*c.lhs);
      }
      if (c.rhs) {
        out["rhs"] = to_json(*c.rhs);
      }
    }
    out["checks"] = r.checks;
    if (r.skipped != 0) {
      out["skipped"] = r.skipped;
    }
    if (!r.note.empty()) {
      out["note"] = r.note;
    }
    if (!r.subreports.empty()) {
      json subs = json::array();
      for (auto const& s : r.subreports) {
        subs.push_back(to_json(s));
      }
      out["subchecks"] = std::move(subs);
    }
    return out;
  }

  Element element_from_json(json const& j) {
    if (!j.is_array() || j.size() != 3) {
      throw MalformedInput("element must be a JSON array [i, j, f], found " + j.dump());
    }
    return {json_int(j[0], "i"), json_int(j[1], "j"), to_index(json_int(j[2], "f"))};
  }

  Family family_from_json(json const& j) {
    json const& starts = member(j, "starts");
    if (!starts.is_array()) {
      throw MalformedInput("\"starts\" must be an array");
    }
    std::vector<std::int64_t> values;
    for (auto const& s : starts) {
      values.push_back(json_int(s, "a tail start"));
    }
    return validate_family(std::move(values));
  }

  CanonicalEndo endo_from_json(json const& j) {
    json const&        base  = member(j, "base");
    json const&        kind  = member(base, "kind");
    std::int64_t const k     = json_int(member(base, "k"), "k");
    std::int64_t const p     = json_int(member(base, "p"), "p");
    std::int64_t const twist = j.contains("twist") ? json_int(j.at("twist"), "twist") : 0;
    if (kind == "alpha") {
      return {make_alpha(k, p), twist};
    }
    if (kind == "beta") {
      return {make_beta(k, p), twist};
    }
    throw MalformedInput("unknown endomorphism kind " + kind.dump());
  }

  MapTable map_table_from_json(json const& j) {
    std::int64_t const n       = json_int(member(j, "n"), "n");
    json const&        entries = member(j, "entries");
    if (!entries.is_array()) {
      throw MalformedInput("\"entries\" must be an array");
    }
    std::vector<std::pair<Element, Element>> pairs;
    pairs.reserve(entries.size());
    for (auto const& e : entries) {
      pairs.emplace_back(element_from_json(member(e, "x")),
                         element_from_json(member(e, "y")));
    }
    return MapTable(n, std::move(pairs));
  }

  json parse_json(std::string_view text) {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
  }

}  // namespace bzf
