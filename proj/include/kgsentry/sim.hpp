#pragma once
// Seeded generator for a desk-scale industrial system: static world graph
// (networks, hosts, apps, OPC-UA variables, PLC structure), a behavior
// profile, baseline event streams and eleven injected attack sub-scenarios
// with ground-truth labels. Also maps event logs onto the typed graph:
// one primary link per event (the triple that gets scored) plus one reified
// event individual carrying attribute edges.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgsentry/graph.hpp"

namespace kgsentry::sim {

inline constexpr const char* kScenarioIds[] = {"1.1", "1.2", "2.1", "2.2", "2.3",
                                               "3.1", "3.2", "3.3", "4.1", "5.1",
                                               "5.2"};

enum class EventKind { data_event, net_conn, init_event };

std::string to_string(EventKind k);
EventKind event_kind_from_string(const std::string& s);

struct GroundTruth {
  bool anomalous = false;
  std::string scenario;  // one of kScenarioIds iff anomalous
};

struct EventRecord {
  std::string event_id;
  EventKind kind = EventKind::data_event;
  std::int64_t ts = 0;
  // data_event: client, variable, operation in {read, write}
  // net_conn:   orig_ip, resp_ip, service in {https, ssh}, resp_port, orig_bytes
  // init_event: client, server_ip
  std::map<std::string, std::string> attrs;
  GroundTruth label;
};

struct WorldConfig {
  std::uint64_t seed = 7;
  int n_apps = 6;          // designated roles: App3 credential, App4 sniff, App5 write
  int n_dev_hosts = 6;     // excludes the historian
  int n_edge_servers = 4;  // excludes the app repository
  int n_variables = 40;
  int n_public_ips = 6;          // last one reserved for scenario 2.3
  int baseline_events = 2000;    // training window, ticks [0, baseline_events)
  int test_baseline_events = 400;
  int scenario_events = 8;       // default count per sub-scenario
  std::map<std::string, int> scenario_overrides;  // scenario id -> count

  int events_for(const std::string& scenario_id) const;
};

// Fixed habits sampled into baseline events.
struct ConnProfile {
  std::string orig_ip, resp_ip, service, port;
  int bucket_lo = 0, bucket_hi = 0;  // log10 volume range
  double weight = 1.0;
};

struct BehaviorProfile {
  // app label -> variable labels (numeric datatypes only for normal apps)
  std::map<std::string, std::vector<std::string>> readable;
  std::map<std::string, std::vector<std::string>> writable;
  std::vector<ConnProfile> conns;
  // app label -> host ip it initiates OPC-UA sessions from
  std::map<std::string, std::string> init_host;
};

struct World {
  WorldConfig config;
  TypedGraph graph;  // static knowledge only, no events
  BehaviorProfile profile;

  std::vector<std::string> app_labels;
  std::vector<std::string> dev_ips;   // dev hosts, historian excluded
  std::vector<std::string> edge_ips;  // edge servers, repository excluded
  std::vector<std::string> public_ips;
  std::vector<std::string> variable_labels;
  std::vector<std::string> string_variables;  // reserved for scenario 1.2
  std::string historian_ip, repo_ip, plc_ip, unassigned_ip;
};

World generate_world(const WorldConfig& config);

// `baseline_events` labeled-baseline records at ticks [0, baseline_events).
std::vector<EventRecord> generate_baseline(const World& world, const WorldConfig& config);

// Labeled anomalous records for all configured sub-scenarios; ticks are
// assigned later when the test window is assembled.
std::vector<EventRecord> inject_scenarios(const World& world, const WorldConfig& config);

// Full event log: training-window baseline, then a test window of held-out
// baseline events interleaved with the injected scenarios. Event ids are
// assigned sequentially over the final order.
std::vector<EventRecord> simulate(const World& world, const WorldConfig& config);

// ---------------------------------------------------------------------------
// Event-to-graph mapping

struct EventMapping {
  Triple primary;          // the link that gets scored
  EntityId individual;     // reified event node
};

struct EventGraph {
  TypedGraph graph;  // world graph extended with the given events
  std::map<std::string, EventMapping> by_event_id;
};

struct EventGraphOptions {
  bool include_primary_links = true;
  bool include_individuals = true;
};

// floor(log10(max(bytes, 1)))
int volume_bucket(std::uint64_t bytes);
std::string volume_bucket_label(std::uint64_t bytes);

EventGraph events_to_graph(const TypedGraph& world_graph,
                           const std::vector<EventRecord>& events,
                           const EventGraphOptions& options = {});

// The primary link of one event expressed as labels.
struct LabelTriple {
  std::string subject, relation, object;
  friend bool operator==(const LabelTriple&, const LabelTriple&) = default;
  friend auto operator<=>(const LabelTriple&, const LabelTriple&) = default;
};

LabelTriple primary_link(const EventRecord& event);

// ---------------------------------------------------------------------------
// JSON Lines event log: fields exactly event_id, kind, ts, attrs{...},
// label{status, scenario}; keys in alphabetical order.

void write_events_jsonl(std::ostream& out, const std::vector<EventRecord>& events);
std::vector<EventRecord> read_events_jsonl(std::istream& in);

}  // namespace kgsentry::sim
