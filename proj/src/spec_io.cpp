#include "simpfib/spec_io.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fstream>

namespace simpfib {

using nlohmann::json;

namespace {

json const& field(json const& spec, char const* key) {
  if (!spec.is_object() || !spec.contains(key)) {
    throw SpecError(fmt::format("missing field \"{}\" in {}", key,
                                spec.dump().substr(0, 80)));
  }
  return spec.at(key);
}

std::size_t positive(json const& spec, char const* key) {
  auto const& v = field(spec, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw SpecError(fmt::format("\"{}\" must be a positive integer", key));
  }
  return v.get<std::size_t>();
}

std::vector<Elem> id_list(json const& v, char const* what) {
  if (!v.is_array()) {
    throw SpecError(fmt::format("{} must be an array of element ids", what));
  }
  std::vector<Elem> out;
  for (auto const& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      throw SpecError(fmt::format("{} contains a non-id entry {}", what,
                                  x.dump()));
    }
    out.push_back(x.get<Elem>());
  }
  return out;
}

GroupPtr table_group(json const& spec) {
  auto const& t = field(spec, "table");
  if (!t.is_array()) {
    throw SpecError("\"table\" must be an array");
  }
  std::vector<Elem> flat;
  if (!t.empty() && t.front().is_array()) {
    for (auto const& row : t) {
      auto ids = id_list(row, "table row");
      if (ids.size() != t.size()) {
        throw SpecError("group table is not square");
      }
      flat.insert(flat.end(), ids.begin(), ids.end());
    }
  } else {
    flat = id_list(t, "table");
  }
  std::vector<std::string> labels;
  if (spec.contains("labels")) {
    labels = spec.at("labels").get<std::vector<std::string>>();
  }
  return std::make_shared<const FiniteGroup>(std::move(flat), std::move(labels));
}

ActionTable parse_action(json const& spec, FiniteGroup const& k,
                         FiniteGroup const& l) {
  if (!spec.contains("action")) {
    return trivial_action(k, l);
  }
  auto const& a = spec.at("action");
  if (a.is_string()) {
    auto s = a.get<std::string>();
    if (s == "trivial") {
      return trivial_action(k, l);
    }
    if (s == "inversion") {
      return inversion_action(k, l);
    }
    throw SpecError(fmt::format("unknown action \"{}\"", s));
  }
  if (!a.is_array()) {
    throw SpecError("\"action\" must be a name or a table");
  }
  ActionTable table;
  for (auto const& row : a) {
    table.push_back(id_list(row, "action row"));
  }
  return table;
}

SemidirectProduct semidirect(json const& spec) {
  auto k = parse_group(field(spec, "K"));
  auto l = parse_group(field(spec, "L"));
  return make_semidirect(k, l, parse_action(spec, *k, *l));
}

/// Applies `table` coordinatewise to mixed-radix tuples of length n + 1.
std::vector<Elem> lift(std::vector<Elem> const& table, std::size_t to, int n) {
  std::size_t const from = table.size();
  std::size_t size = 1;
  for (int f = 0; f <= n; ++f) {
    size *= from;
  }
  std::vector<Elem> out(size);
  std::vector<Elem> digits(n + 1);
  for (std::size_t x = 0; x < size; ++x) {
    auto rest = x;
    for (int f = n; f >= 0; --f) {
      digits[f] = static_cast<Elem>(rest % from);
      rest /= from;
    }
    std::size_t y = 0;
    for (int f = 0; f <= n; ++f) {
      y = y * to + table[digits[f]];
    }
    out[x] = static_cast<Elem>(y);
  }
  return out;
}

}  // namespace

json read_json_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw SpecError(fmt::format("cannot open {}", path.string()));
  }
  try {
    return json::parse(in);
  } catch (json::parse_error const& e) {
    throw SpecError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

GroupPtr parse_group(json const& spec) {
  try {
    auto const& kind_field = field(spec, "kind");
    if (!kind_field.is_string()) {
      throw SpecError("\"kind\" must be a string");
    }
    auto const kind = kind_field.get<std::string>();
    if (kind == "cyclic") {
      auto symbol = spec.value("symbol", std::string());
      return make_cyclic(positive(spec, "n"), symbol);
    }
    if (kind == "trivial") {
      return make_trivial();
    }
    if (kind == "symmetric") {
      return make_symmetric(positive(spec, "n"));
    }
    if (kind == "dihedral") {
      return make_dihedral(positive(spec, "order"));
    }
    if (kind == "direct") {
      auto const& factors = field(spec, "factors");
      if (!factors.is_array() || factors.empty()) {
        throw SpecError("\"factors\" must be a non-empty array");
      }
      auto g = parse_group(factors.front());
      for (std::size_t i = 1; i < factors.size(); ++i) {
        g = make_direct_product(g, parse_group(factors[i]));
      }
      return g;
    }
    if (kind == "table") {
      return table_group(spec);
    }
    if (kind == "semidirect") {
      return semidirect(spec).group;
    }
    throw SpecError(fmt::format("unknown group kind \"{}\"", kind));
  } catch (GroupError const& e) {
    throw SpecError(e.what());
  } catch (json::exception const& e) {
    throw SpecError(e.what());
  }
}

GroupPtr parse_group_shorthand(std::string_view text) {
  auto star = text.find('*');
  if (star != std::string_view::npos) {
    return make_direct_product(parse_group_shorthand(text.substr(0, star)),
                               parse_group_shorthand(text.substr(star + 1)));
  }
  if (text == "trivial") {
    return make_trivial();
  }
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw SpecError(fmt::format("unknown group \"{}\"", text));
  }
  auto family = text.substr(0, colon);
  auto arg = text.substr(colon + 1);
  std::size_t n = 0;
  auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || end != arg.data() + arg.size() || n == 0) {
    throw SpecError(fmt::format("bad size in \"{}\"", text));
  }
  try {
    if (family == "cyclic") {
      return make_cyclic(n);
    }
    if (family == "symmetric") {
      return make_symmetric(n);
    }
    if (family == "dihedral") {
      return make_dihedral(n);
    }
  } catch (GroupError const& e) {
    throw SpecError(e.what());
  }
  throw SpecError(fmt::format("unknown group family \"{}\"", family));
}

GroupPtr load_group(std::string const& argument) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) {
    return parse_group(read_json_file(argument));
  }
  return parse_group_shorthand(argument);
}

SesSpec parse_ses(json const& spec, int cutoff) {
  try {
    if (!spec.is_object()) {
      throw SpecError("a sequence spec must be a JSON object");
    }
    auto const mode = spec.value("simplicial", std::string("constant"));
    if (mode != "constant" && mode != "coskeleton") {
      throw SpecError(fmt::format("unknown simplicial structure \"{}\"", mode));
    }
    std::optional<GroupHom> iota, pi;
    std::vector<Elem> base_section;  // a section of the level-0 groups
    if (spec.contains("semidirect")) {
      auto product = semidirect(spec.at("semidirect"));
      iota = product.inclusion;
      pi = product.projection;
      base_section = product.section.image();
    } else if (spec.contains("K_elements")) {
      auto g = parse_group(field(spec, "G"));
      auto q = quotient_by(g, id_list(spec.at("K_elements"), "K_elements"));
      iota = q.inclusion;
      pi = q.projection;
    } else {
      auto k = parse_group(field(spec, "K"));
      auto g = parse_group(field(spec, "G"));
      auto l = parse_group(field(spec, "L"));
      iota = GroupHom(k, g, id_list(field(spec, "iota"), "iota"));
      pi = GroupHom(g, l, id_list(field(spec, "pi"), "pi"));
    }

    SesSpec out;
    out.name = spec.value("name", std::string("ses"));
    auto ses = mode == "coskeleton"
                   ? ShortExactSequence::coskeleton(*iota, *pi, cutoff)
                   : ShortExactSequence::constant(*iota, *pi, cutoff);
    std::size_t const g_order = pi->source()->order();

    std::vector<std::vector<Elem>> tables;
    auto per_level = [&](std::vector<Elem> const& table) {
      for (int n = 0; n <= cutoff; ++n) {
        tables.push_back(mode == "coskeleton" ? lift(table, g_order, n) : table);
      }
    };
    if (spec.contains("section")) {
      auto const& s = spec.at("section");
      if (s.is_array()) {
        per_level(id_list(s, "section"));
      } else if (s.is_object()) {
        for (int n = 0; n <= cutoff; ++n) {
          auto key = std::to_string(n);
          if (!s.contains(key)) {
            throw SpecError(fmt::format("section has no table for level {}", n));
          }
          tables.push_back(id_list(s.at(key), "section"));
        }
      } else {
        throw SpecError("\"section\" must be a table or a map of tables");
      }
    } else if (!base_section.empty()) {
      per_level(base_section);
    } else if (pi->surjective()) {
      per_level(coset_section(*pi).sigma);
    } else {
      // No section exists; keep σ = 1 so the sequence checks report why.
      per_level(std::vector<Elem>(pi->target()->order(),
                                    pi->source()->identity()));
    }
    out.ses = std::make_shared<const ShortExactSequence>(std::move(ses));
    out.section = PseudoSection(std::move(tables));
    return out;
  } catch (GroupError const& e) {
    throw SpecError(e.what());
  } catch (json::exception const& e) {
    throw SpecError(e.what());
  }
}

SesSpec load_ses(std::filesystem::path const& path, int cutoff) {
  auto spec = parse_ses(read_json_file(path), cutoff);
  if (spec.name == "ses") {
    spec.name = path.stem().string();
  }
  return spec;
}

}  // namespace simpfib
