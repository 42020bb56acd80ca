#include "cb/term_io.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>

#include "cb/ordinal_text.hpp"

namespace cb {

namespace {

using nlohmann::json;

json scheme_to_json(const RankScheme& scheme) {
  if (const auto* c = std::get_if<ConstRank>(&scheme)) {
    return json{{"kind", "const"}, {"rho", print_ordinal(c->rho)}};
  }
  return json{{"kind", "fundamental"},
              {"lambda", print_ordinal(std::get<FundamentalRank>(scheme).lambda)}};
}

RankScheme scheme_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") return ConstRank{parse_ordinal(j.at("rho").get<std::string>())};
  if (kind == "fundamental") {
    return FundamentalRank{parse_ordinal(j.at("lambda").get<std::string>())};
  }
  throw InvalidTerm("unknown rank scheme kind: " + kind);
}

json term_to_json(const SetTerm& t) {
  switch (t.kind()) {
    case TermKind::Empty: return json{{"kind", "empty"}};
    case TermKind::Point: return json{{"kind", "point"}, {"q", t.point_value().str()}};
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      return json{{"kind", "tower"},
                  {"lo", tw.hull.lo.str()},
                  {"hi", tw.hull.hi.str()},
                  {"scheme", scheme_to_json(tw.scheme)},
                  {"alive_from", tw.alive_from},
                  {"derived_by", print_ordinal(tw.derived_by)}};
    }
    case TermKind::Union: {
      json parts = json::array();
      for (const auto& p : t.union_parts()) parts.push_back(term_to_json(p));
      return json{{"kind", "union"}, {"parts", std::move(parts)}};
    }
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      json items = json::array();
      for (const auto& item : at.items) {
        json entry{{"point", item.point.str()}};
        entry["tower"] = item.tower ? term_to_json(*item.tower) : json(nullptr);
        items.push_back(std::move(entry));
      }
      json out{{"kind", "attach"}, {"items", std::move(items)}};
      if (at.rest) {
        out["rest"] = term_to_json(*at.rest);
        out["pending_rank"] = print_ordinal(at.pending_rank);
      }
      return out;
    }
  }
  return json{{"kind", "empty"}};
}

SetTerm term_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "empty") return SetTerm::empty();
  if (kind == "point") return SetTerm::point(Rational::parse(j.at("q").get<std::string>()));
  if (kind == "tower") {
    Interval hull(Rational::parse(j.at("lo").get<std::string>()),
                  Rational::parse(j.at("hi").get<std::string>()));
    return SetTerm::tower(std::move(hull), scheme_from_json(j.at("scheme")),
                          j.value("alive_from", std::uint64_t(0)),
                          parse_ordinal(j.value("derived_by", std::string("0"))));
  }
  if (kind == "union") {
    std::vector<SetTerm> parts;
    for (const auto& part : j.at("parts")) parts.push_back(term_from_json(part));
    return SetTerm::union_of(std::move(parts));
  }
  if (kind == "attach") {
    std::vector<AttachItem> items;
    for (const auto& entry : j.at("items")) {
      AttachItem item{Rational::parse(entry.at("point").get<std::string>()), std::nullopt};
      if (entry.contains("tower") && !entry.at("tower").is_null()) {
        item.tower = term_from_json(entry.at("tower"));
      }
      items.push_back(std::move(item));
    }
    if (j.contains("rest") && !j.at("rest").is_null()) {
      return SetTerm::attach(std::move(items), term_from_json(j.at("rest")),
                             parse_ordinal(j.at("pending_rank").get<std::string>()));
    }
    return SetTerm::attach(std::move(items));
  }
  throw InvalidTerm("unknown term kind: " + kind);
}

}  // namespace

std::string serialize_term(const SetTerm& t, bool pretty) {
  json j = term_to_json(t);
  return pretty ? j.dump(2) : j.dump();
}

SetTerm deserialize_term(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    return term_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidTerm(std::string("malformed term JSON: ") + e.what());
  }
}

void write_enumeration_csv(std::ostream& os, const Enumeration& rows) {
  os << "point_num,point_den,address,rank\n";
  for (const auto& row : rows) {
    os << row.point.num() << ',' << row.point.den() << ',';
    for (std::size_t i = 0; i < row.address.size(); ++i) {
      if (i > 0) os << '.';
      os << row.address[i];
    }
    os << ',' << print_ordinal(row.rank) << '\n';
  }
}

std::vector<Rational> read_rationals(std::istream& is) {
  std::vector<Rational> out;
  std::string line;
  while (std::getline(is, line)) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    out.push_back(Rational::parse(line.substr(begin, end - begin + 1)));
  }
  return out;
}

}  // namespace cb
