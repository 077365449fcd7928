#include "prosa/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prosa::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == sep) {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad ") + what + " value: '" + s + "'");
  }
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const std::uint64_t value = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad ") + what + " value: '" + s + "'");
  }
}

bool parse_bool(const std::string& s, const char* what) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw std::runtime_error(std::string("bad ") + what + " value: '" + s + "'");
}

std::string transition_text(const std::optional<LinkType>& before, LinkType after) {
  std::string text = before ? link_type_name(*before) : "none";
  text += "->";
  text += link_type_name(after);
  return text;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_metrics_csv(const MetricsReport& report, std::ostream& out) {
  out << "record,apl,cc,random_apl,random_cc,nodes,edges\n";
  out << "summary," << format_double(report.apl) << ',' << format_double(report.cc)
      << ',' << (report.random_apl ? format_double(*report.random_apl) : "nan") << ','
      << format_double(report.random_cc) << ',' << report.node_count << ','
      << report.edge_count << '\n';
  for (const auto& [start, apl] : report.apl_windows) {
    out << "window," << start << ',' << format_double(apl) << ",,,,\n";
  }
  for (const auto& [peer, cc] : report.cc_per_node) {
    out << "node," << peer << ',' << format_double(cc) << ",,,,\n";
  }
}

std::string metrics_csv(const MetricsReport& report) {
  std::ostringstream out;
  write_metrics_csv(report, out);
  return out.str();
}

MetricsReport load_metrics_csv(std::istream& in) {
  MetricsReport report;
  std::string line;
  bool saw_summary = false;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {  // header
      first = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 7) throw std::runtime_error("metrics csv: malformed row: " + line);
    if (fields[0] == "summary") {
      report.apl = parse_double(fields[1], "apl");
      report.cc = parse_double(fields[2], "cc");
      if (fields[3] == "nan") {
        report.random_apl.reset();
      } else {
        report.random_apl = parse_double(fields[3], "random_apl");
      }
      report.random_cc = parse_double(fields[4], "random_cc");
      report.node_count = parse_u64(fields[5], "nodes");
      report.edge_count = parse_u64(fields[6], "edges");
      saw_summary = true;
    } else if (fields[0] == "window") {
      report.apl_windows.emplace_back(parse_u64(fields[1], "window start"),
                                      parse_double(fields[2], "window apl"));
    } else if (fields[0] == "node") {
      report.cc_per_node.emplace_back(
          static_cast<PeerId>(parse_u64(fields[1], "peer")),
          parse_double(fields[2], "node cc"));
    } else {
      throw std::runtime_error("metrics csv: unknown record type: " + fields[0]);
    }
  }
  if (!saw_summary) throw std::runtime_error("metrics csv: missing summary row");
  return report;
}

void write_trace_csv(const std::vector<QueryTrace>& traces, std::ostream& out) {
  out << "qid,event,from,to,depth,detail\n";
  for (const auto& trace : traces) {
    for (const auto& event : trace.events) {
      out << trace.query_id << ',' << trace_event_kind_name(event.kind) << ',';
      if (event.from != kNoPeer) out << event.from;
      out << ',';
      if (event.to != kNoPeer) out << event.to;
      out << ',' << event.depth << ',';
      switch (event.kind) {
        case TraceEventKind::Forward:
          out << forward_mode_name(event.mode);
          break;
        case TraceEventKind::Respond:
          out << event.num_results;
          break;
        case TraceEventKind::LinkUpdate:
          out << transition_text(event.label_before, event.label_after);
          break;
        default:
          break;
      }
      out << '\n';
    }
  }
}

std::string trace_csv(const std::vector<QueryTrace>& traces) {
  std::ostringstream out;
  write_trace_csv(traces, out);
  return out.str();
}

std::vector<TraceCsvRow> load_trace_csv(std::istream& in) {
  std::vector<TraceCsvRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 6) throw std::runtime_error("trace csv: malformed row: " + line);
    TraceCsvRow row;
    row.query_id = parse_u64(fields[0], "qid");
    row.event = fields[1];
    row.from = fields[2].empty() ? kNoPeer
                                 : static_cast<PeerId>(parse_u64(fields[2], "from"));
    row.to = fields[3].empty() ? kNoPeer
                               : static_cast<PeerId>(parse_u64(fields[3], "to"));
    row.depth = parse_u64(fields[4], "depth");
    row.detail = fields[5];
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_edge_list(const OverlayNetwork& net, std::ostream& out) {
  for (PeerId source = 0; source < net.peer_count(); ++source) {
    for (const auto& [target, label] : net.neighborhood(source)) {
      out << source << ' ' << target << ' ' << link_type_name(label.type) << '\n';
    }
  }
}

std::string edge_list(const OverlayNetwork& net) {
  std::ostringstream out;
  write_edge_list(net, out);
  return out.str();
}

std::vector<EdgeListEntry> load_edge_list(std::istream& in) {
  std::vector<EdgeListEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    std::uint64_t source = 0;
    std::uint64_t target = 0;
    std::string label;
    if (!(row >> source >> target >> label)) {
      throw std::runtime_error("edge list: malformed line: " + line);
    }
    const auto type = parse_link_type(label);
    if (!type) throw std::runtime_error("edge list: unknown label: " + label);
    entries.push_back({static_cast<PeerId>(source), static_cast<PeerId>(target), *type});
  }
  return entries;
}

void write_sweep_summary_csv(
    const std::vector<std::pair<std::size_t, MetricsReport>>& rows, std::ostream& out) {
  auto sorted = rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out << "size,apl,random_apl,cc,random_cc\n";
  for (const auto& [size, report] : sorted) {
    out << size << ',' << format_double(report.apl) << ','
        << (report.random_apl ? format_double(*report.random_apl) : "nan") << ','
        << format_double(report.cc) << ',' << format_double(report.random_cc) << '\n';
  }
}

void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value) {
  if (key == "nodes") config.node_count = parse_u64(value, key.c_str());
  else if (key == "queries_per_node") config.queries_per_node = parse_u64(value, key.c_str());
  else if (key == "required_results") config.required_results = parse_u64(value, key.c_str());
  else if (key == "topics") config.topic_count = parse_u64(value, key.c_str());
  else if (key == "topics_per_peer") config.topics_per_peer = parse_u64(value, key.c_str());
  else if (key == "docs_per_peer_min") config.docs_per_peer_min = parse_u64(value, key.c_str());
  else if (key == "docs_per_peer_max") config.docs_per_peer_max = parse_u64(value, key.c_str());
  else if (key == "terms_per_topic") config.terms_per_topic = parse_u64(value, key.c_str());
  else if (key == "join_fanout") config.join_fanout = parse_u64(value, key.c_str());
  else if (key == "doc_threshold") config.doc_threshold = parse_double(value, key.c_str());
  else if (key == "flood_threshold") config.flood_threshold = parse_double(value, key.c_str());
  else if (key == "ttl") config.ttl = parse_u64(value, key.c_str());
  else if (key == "seed") config.seed = parse_u64(value, key.c_str());
  else if (key == "query_locality") config.query_locality = parse_double(value, key.c_str());
  else if (key == "noise_factor") config.noise_factor = parse_double(value, key.c_str());
  else if (key == "random_issuers") config.random_issuers = parse_bool(value, key.c_str());
  else if (key == "apl_window") config.apl_window = parse_u64(value, key.c_str());
  else if (key == "apl_step") config.apl_step = parse_u64(value, key.c_str());
  else if (key == "checkpoint_interval") config.checkpoint_interval = parse_u64(value, key.c_str());
  else if (key == "cc_count_undefined_as_zero") config.cc_count_undefined_as_zero = parse_bool(value, key.c_str());
  else if (key == "apl_first_responder_only") config.apl_first_responder_only = parse_bool(value, key.c_str());
  else throw std::runtime_error("config: unknown key '" + key + "'");
}

void apply_config_stream(ExperimentConfig& config, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.resize(comment);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               " is not 'key = value'");
    }
    apply_config_entry(config, trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  apply_config_stream(config, in);
}

ExperimentConfig load_config(std::istream& in) {
  ExperimentConfig config;
  apply_config_stream(config, in);
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  ExperimentConfig config;
  apply_config_file(config, path);
  return config;
}

std::vector<std::pair<std::string, std::string>> config_entries(
    const ExperimentConfig& config) {
  return {
      {"nodes", std::to_string(config.node_count)},
      {"queries_per_node", std::to_string(config.queries_per_node)},
      {"required_results", std::to_string(config.required_results)},
      {"topics", std::to_string(config.topic_count)},
      {"topics_per_peer", std::to_string(config.topics_per_peer)},
      {"docs_per_peer_min", std::to_string(config.docs_per_peer_min)},
      {"docs_per_peer_max", std::to_string(config.docs_per_peer_max)},
      {"terms_per_topic", std::to_string(config.terms_per_topic)},
      {"join_fanout", std::to_string(config.join_fanout)},
      {"doc_threshold", format_double(config.doc_threshold)},
      {"flood_threshold", format_double(config.flood_threshold)},
      {"ttl", std::to_string(config.ttl)},
      {"seed", std::to_string(config.seed)},
      {"query_locality", format_double(config.query_locality)},
      {"noise_factor", format_double(config.noise_factor)},
      {"random_issuers", config.random_issuers ? "true" : "false"},
      {"apl_window", std::to_string(config.apl_window)},
      {"apl_step", std::to_string(config.apl_step)},
      {"checkpoint_interval", std::to_string(config.checkpoint_interval)},
      {"cc_count_undefined_as_zero", config.cc_count_undefined_as_zero ? "true" : "false"},
      {"apl_first_responder_only", config.apl_first_responder_only ? "true" : "false"},
  };
}

void write_config(const ExperimentConfig& config, std::ostream& out) {
  for (const auto& [key, value] : config_entries(config)) {
    out << key << " = " << value << '\n';
  }
}

std::string config_text(const ExperimentConfig& config) {
  std::ostringstream out;
  write_config(config, out);
  return out.str();
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t hash = 0xCBF29CE484222325ull;
  for (unsigned char byte : data) {
    hash ^= byte;
    hash *= 0x100000001B3ull;
  }
  return hash;
}

}  // namespace prosa::io
