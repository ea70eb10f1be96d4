#include "topocat/json_io.hpp"

#include <cstddef>
#include <fstream>
#include <unordered_map>
#include <utility>

namespace topocat {

namespace {

std::unordered_map<std::string, int> label_index(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> out;
  for (std::size_t i = 0; i < labels.size(); ++i) out.emplace(labels[i], static_cast<int>(i));
  return out;
}

Json labels_to_json(const std::vector<std::string>& labels, Mask mask) {
  Json arr = Json::array();
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (mask >> p & 1) arr.push_back(labels[p]);
  }
  return arr;
}

Mask mask_from_label_array(const Json& arr, const std::unordered_map<std::string, int>& index,
                           const std::string& where) {
  if (!arr.is_array()) {
    throw Error(ErrorKind::ParseError, where + " must be an array of point labels");
  }
  Mask m = 0;
  for (const auto& el : arr) {
    if (!el.is_string()) {
      throw Error(ErrorKind::ParseError, where + " contains a non-string element");
    }
    const auto it = index.find(el.get<std::string>());
    if (it == index.end()) {
      throw Error(ErrorKind::ParseError,
                  "unknown point label \"" + el.get<std::string>() + "\" in " + where);
    }
    m |= Mask{1} << it->second;
  }
  return m;
}

const Json& require_field(const Json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorKind::ParseError,
                std::string(what) + " is missing the \"" + key + "\" field");
  }
  return *it;
}

}  // namespace

std::vector<std::string> effective_labels(const FiniteSpace& space) {
  if (!space.point_labels().empty()) return space.point_labels();
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(space.point_count()));
  for (int p = 0; p < space.point_count(); ++p) out.push_back(std::to_string(p));
  return out;
}

std::vector<std::string> subset_labels(const FiniteSpace& space, Mask mask) {
  const auto labels = effective_labels(space);
  std::vector<std::string> out;
  for (int p = 0; p < space.point_count(); ++p) {
    if (mask >> p & 1) out.push_back(labels[static_cast<std::size_t>(p)]);
  }
  return out;
}

std::string render_subset(const FiniteSpace& space, Mask mask) {
  const auto parts = subset_labels(space, mask);
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += parts[i];
  }
  out += '}';
  return out;
}

Json space_to_json(const FiniteSpace& space) {
  const auto labels = effective_labels(space);
  Json j;
  j["points"] = labels;
  Json sets = Json::array();
  for (Mask m : space.closed_family()) sets.push_back(labels_to_json(labels, m));
  j["closed_sets"] = sets;
  return j;
}

FiniteSpace space_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "space must be a JSON object");
  const Json& points = require_field(j, "points", "space");
  if (!points.is_array()) {
    throw Error(ErrorKind::ParseError, "\"points\" must be an array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& el : points) {
    if (!el.is_string()) {
      throw Error(ErrorKind::ParseError, "\"points\" contains a non-string element");
    }
    labels.push_back(el.get<std::string>());
  }
  const bool has_closed = j.contains("closed_sets");
  const bool has_open = j.contains("open_sets");
  if (has_closed == has_open) {
    throw Error(ErrorKind::ParseError,
                "space needs exactly one of \"closed_sets\" and \"open_sets\"");
  }
  const auto index = label_index(labels);
  if (index.size() != labels.size()) {
    throw Error(ErrorKind::BadLabels, "point labels must be distinct");
  }
  const char* key = has_closed ? "closed_sets" : "open_sets";
  const Json& sets = *j.find(key);
  if (!sets.is_array()) {
    throw Error(ErrorKind::ParseError, "\"" + std::string(key) + "\" must be an array of sets");
  }
  std::vector<Mask> family;
  family.reserve(sets.size());
  for (const auto& el : sets) family.push_back(mask_from_label_array(el, index, key));
  const int n = static_cast<int>(labels.size());
  if (has_closed) return FiniteSpace(n, std::move(family), std::move(labels));
  return from_open_family(n, family, std::move(labels));
}

Json set_function_to_json(const SetFunction& fn) {
  Json j;
  j["domain"] = space_to_json(fn.domain);
  j["codomain"] = space_to_json(fn.codomain);
  const auto dom = effective_labels(fn.domain);
  const auto cod = effective_labels(fn.codomain);
  Json map = Json::object();
  for (int p = 0; p < fn.domain.point_count(); ++p) {
    map[dom[static_cast<std::size_t>(p)]] =
        cod[static_cast<std::size_t>(fn.mapping[static_cast<std::size_t>(p)])];
  }
  j["map"] = map;
  return j;
}

SetFunction set_function_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "function must be a JSON object");
  FiniteSpace domain = space_from_json(require_field(j, "domain", "function"));
  FiniteSpace codomain = space_from_json(require_field(j, "codomain", "function"));
  const Json& map = require_field(j, "map", "function");
  if (!map.is_object()) {
    throw Error(ErrorKind::ParseError, "\"map\" must be an object of label pairs");
  }
  const auto dom_labels = effective_labels(domain);
  const auto dom_index = label_index(dom_labels);
  const auto cod_index = label_index(effective_labels(codomain));
  std::vector<int> mapping(dom_labels.size(), -1);
  for (auto it = map.begin(); it != map.end(); ++it) {
    const auto dit = dom_index.find(it.key());
    if (dit == dom_index.end()) {
      throw Error(ErrorKind::MalformedFunction,
                  "map key \"" + it.key() + "\" is not a domain point");
    }
    if (!it.value().is_string()) {
      throw Error(ErrorKind::ParseError, "map values must be codomain point labels");
    }
    const auto cit = cod_index.find(it.value().get<std::string>());
    if (cit == cod_index.end()) {
      throw Error(ErrorKind::MalformedFunction,
                  "map value \"" + it.value().get<std::string>() + "\" is not a codomain point");
    }
    mapping[static_cast<std::size_t>(dit->second)] = cit->second;
  }
  for (std::size_t p = 0; p < mapping.size(); ++p) {
    if (mapping[p] < 0) {
      throw Error(ErrorKind::MalformedFunction,
                  "map is missing domain point \"" + dom_labels[p] + "\"");
    }
  }
  return make_set_function(std::move(domain), std::move(codomain), std::move(mapping));
}

Json monotone_map_to_json(const MonotoneMap& map) {
  ensure_well_formed(map);
  Json j;
  j["source"] = space_to_json(map.source);
  j["target"] = space_to_json(map.target);
  const auto src_labels = effective_labels(map.source);
  const auto tgt_labels = effective_labels(map.target);
  Json table = Json::array();
  const auto& family = map.source.closed_family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Mask image =
        map.target.closed_family()[static_cast<std::size_t>(map.table[i])];
    table.push_back(Json::array(
        {labels_to_json(src_labels, family[i]), labels_to_json(tgt_labels, image)}));
  }
  j["table"] = table;
  return j;
}

MonotoneMap monotone_map_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "functor must be a JSON object");
  FiniteSpace source = space_from_json(require_field(j, "source", "functor"));
  FiniteSpace target = space_from_json(require_field(j, "target", "functor"));
  const Json& table = require_field(j, "table", "functor");
  if (!table.is_array()) {
    throw Error(ErrorKind::ParseError, "\"table\" must be an array of [set, image] pairs");
  }
  const auto src_index = label_index(effective_labels(source));
  const auto tgt_index = label_index(effective_labels(target));
  std::vector<int> entries(source.closed_family().size(), -1);
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != 2) {
      throw Error(ErrorKind::ParseError, "each table row must be a [set, image] pair");
    }
    const Mask u = mask_from_label_array(row[0], src_index, "table");
    const Mask v = mask_from_label_array(row[1], tgt_index, "table");
    const int ui = source.index_of_closed(u);
    if (ui < 0) {
      throw Error(ErrorKind::MalformedTable,
                  "table lists " + render_subset(source, u) + " which is not closed in the source");
    }
    const int vi = target.index_of_closed(v);
    if (vi < 0) {
      throw Error(ErrorKind::MalformedTable,
                  "image " + render_subset(target, v) + " is not closed in the target");
    }
    if (entries[static_cast<std::size_t>(ui)] != -1) {
      throw Error(ErrorKind::MalformedTable,
                  "table lists " + render_subset(source, u) + " more than once");
    }
    entries[static_cast<std::size_t>(ui)] = vi;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) {
      throw Error(ErrorKind::MalformedTable,
                  "table is missing closed set " +
                      render_subset(source, source.closed_family()[i]));
    }
  }
  return MonotoneMap{std::move(source), std::move(target), std::move(entries)};
}

Json verdict_to_json(const AdjunctionVerdict& verdict,
                     const FiniteSpace& x, const FiniteSpace& y) {
  Json j;
  j["adjoint"] = verdict.adjoint;
  if (!verdict.adjoint && verdict.witness) {
    Json w;
    w["U"] = labels_to_json(effective_labels(x), verdict.witness->first.mask);
    w["V"] = labels_to_json(effective_labels(y), verdict.witness->second.mask);
    j["witness"] = w;
  }
  return j;
}

Json theorem_report_to_json(const TheoremReport& report, const SetFunction& fn) {
  Json j;
  j["continuous"] = report.continuous;
  j["adjoint"] = report.adjoint;
  j["agree"] = report.agree;
  if (report.continuity_witness) {
    j["continuity_witness"] =
        labels_to_json(effective_labels(fn.codomain), report.continuity_witness->mask);
  }
  if (report.adjunction_witness) {
    Json w;
    w["U"] = labels_to_json(effective_labels(fn.domain), report.adjunction_witness->first.mask);
    w["V"] = labels_to_json(effective_labels(fn.codomain), report.adjunction_witness->second.mask);
    j["adjunction_witness"] = w;
  }
  return j;
}

Json campaign_report_to_json(const CampaignReport& report) {
  Json j;
  j["max_points"] = report.max_points;
  j["spaces_checked"] = report.spaces_checked;
  j["functions_checked"] = report.functions_checked;
  j["continuous_count"] = report.continuous_count;
  Json blocks = Json::array();
  for (const auto& b : report.blocks) {
    Json jb;
    jb["domain_points"] = b.domain_points;
    jb["codomain_points"] = b.codomain_points;
    jb["functions_checked"] = b.functions_checked;
    jb["continuous_count"] = b.continuous_count;
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    Json jm;
    jm["domain_points"] = m.domain_points;
    jm["codomain_points"] = m.codomain_points;
    jm["domain_space_index"] = m.domain_space_index;
    jm["codomain_space_index"] = m.codomain_space_index;
    jm["function_index"] = m.function_index;
    mismatches.push_back(jm);
  }
  j["mismatches"] = mismatches;
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

Json gallery_to_json(const std::vector<GalleryEntry>& gallery) {
  Json arr = Json::array();
  for (const auto& entry : gallery) {
    Json j;
    j["function"] = set_function_to_json(entry.fn);
    j["continuity_witness"] =
        labels_to_json(effective_labels(entry.fn.codomain), entry.continuity_witness.mask);
    j["constructed_U"] =
        labels_to_json(effective_labels(entry.fn.domain), entry.constructed_u.mask);
    arr.push_back(j);
  }
  return arr;
}

Json error_to_json(const Error& error, const std::vector<std::string>* labels) {
  Json j;
  j["error"] = to_string(error.kind());
  j["message"] = error.what();
  if (error.detail_pair() && labels) {
    const auto [a, b] = *error.detail_pair();
    j["pair"] = Json::array({labels_to_json(*labels, a), labels_to_json(*labels, b)});
  }
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

}  // namespace topocat
