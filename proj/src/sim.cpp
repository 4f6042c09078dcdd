#include "kgsentry/sim.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>

#include <nlohmann/json.hpp>

#include "kgsentry/errors.hpp"

namespace kgsentry::sim {

namespace {

constexpr const char* kKindApp = "App";
constexpr const char* kKindIp = "IP";
constexpr const char* kKindVar = "UAVariable";
constexpr const char* kKindNetwork = "Network";
constexpr const char* kKindPort = "PortValue";
constexpr const char* kKindBucket = "VolumeBucket";
constexpr const char* kKindDataType = "DataTypeValue";
constexpr const char* kKindService = "Service";
constexpr const char* kKindOperation = "Operation";
constexpr const char* kKindInternalElement = "InternalElement";
constexpr const char* kKindExternalInterface = "ExternalInterface";

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed * 0x100000001b3ull + stream);
}

template <typename Rng>
std::size_t weighted_pick(Rng& rng, const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  std::uniform_real_distribution<double> dist(0.0, total);
  double x = dist(rng);
  double acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (x < acc) return i;
  }
  return weights.size() - 1;
}

template <typename Rng>
std::uint64_t sample_bytes(Rng& rng, int bucket_lo, int bucket_hi) {
  std::uniform_int_distribution<int> bdist(bucket_lo, bucket_hi);
  int b = bdist(rng);
  if (b <= 0) {
    std::uniform_int_distribution<std::uint64_t> v(0, 9);
    return v(rng);
  }
  std::uint64_t lo = 1;
  for (int i = 0; i < b; ++i) lo *= 10;
  std::uniform_int_distribution<std::uint64_t> v(lo, lo * 10 - 1);
  return v(rng);
}

EventRecord make_data_event(const std::string& app, const std::string& var,
                            const std::string& op) {
  EventRecord e;
  e.kind = EventKind::data_event;
  e.attrs = {{"client", app}, {"operation", op}, {"variable", var}};
  return e;
}

EventRecord make_conn_event(const std::string& orig, const std::string& resp,
                            const std::string& service, const std::string& port,
                            std::uint64_t bytes) {
  EventRecord e;
  e.kind = EventKind::net_conn;
  e.attrs = {{"orig_bytes", std::to_string(bytes)},
             {"orig_ip", orig},
             {"resp_ip", resp},
             {"resp_port", port},
             {"service", service}};
  return e;
}

EventRecord make_init_event(const std::string& app, const std::string& server_ip) {
  EventRecord e;
  e.kind = EventKind::init_event;
  e.attrs = {{"client", app}, {"server_ip", server_ip}};
  return e;
}

}  // namespace

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::data_event: return "data_event";
    case EventKind::net_conn: return "net_conn";
    case EventKind::init_event: return "init_event";
  }
  return "?";
}

EventKind event_kind_from_string(const std::string& s) {
  if (s == "data_event") return EventKind::data_event;
  if (s == "net_conn") return EventKind::net_conn;
  if (s == "init_event") return EventKind::init_event;
  throw DataError("unknown event kind '" + s + "'");
}

int WorldConfig::events_for(const std::string& scenario_id) const {
  auto it = scenario_overrides.find(scenario_id);
  return it != scenario_overrides.end() ? it->second : scenario_events;
}

int volume_bucket(std::uint64_t bytes) {
  if (bytes < 1) bytes = 1;
  return static_cast<int>(std::floor(std::log10(static_cast<double>(bytes)) + 1e-12));
}

std::string volume_bucket_label(std::uint64_t bytes) {
  return "orig_bytes_log_10to" + std::to_string(volume_bucket(bytes));
}

World generate_world(const WorldConfig& config) {
  bool scenarios_requested = false;
  for (const char* id : kScenarioIds)
    if (config.events_for(id) > 0) scenarios_requested = true;
  if (config.n_apps < 0 || config.n_dev_hosts < 0 || config.n_edge_servers < 0 ||
      config.n_variables < 0 || config.n_public_ips < 0)
    throw ConfigError("world counts must be non-negative");
  if (scenarios_requested &&
      (config.n_apps < 5 || config.n_dev_hosts < 5 || config.n_edge_servers < 3 ||
       config.n_public_ips < 3 || config.n_variables < 10))
    throw ConfigError(
        "scenario injection needs n_apps>=5, n_dev_hosts>=5, n_edge_servers>=3, "
        "n_public_ips>=3, n_variables>=10");
  if (config.n_dev_hosts < 1 || config.n_edge_servers < 1)
    throw ConfigError("a dev host and an edge server are always required");

  World w;
  w.config = config;
  w.plc_ip = "192.168.0.10";
  w.historian_ip = "192.168.0.60";
  w.repo_ip = "192.168.0.100";
  w.unassigned_ip = "192.168.0.250";

  // Dev-host addresses start with the ones quoted in scenario write-ups.
  const std::vector<std::string> dev_pool = {"192.168.0.80", "192.168.0.81",
                                             "192.168.0.18", "192.168.0.19"};
  for (int i = 0; i < config.n_dev_hosts; ++i) {
    if (i < static_cast<int>(dev_pool.size()))
      w.dev_ips.push_back(dev_pool[i]);
    else
      w.dev_ips.push_back("192.168.0." + std::to_string(82 + i - dev_pool.size()));
  }
  const std::vector<std::string> edge_pool = {"192.168.0.17", "192.168.0.20",
                                              "192.168.0.21"};
  for (int i = 0; i < config.n_edge_servers; ++i) {
    if (i < static_cast<int>(edge_pool.size()))
      w.edge_ips.push_back(edge_pool[i]);
    else
      w.edge_ips.push_back("192.168.0." + std::to_string(22 + i - edge_pool.size()));
  }
  for (int i = 0; i < config.n_public_ips; ++i)
    w.public_ips.push_back("203.0.113." + std::to_string(i + 1));

  for (int i = 0; i < config.n_apps; ++i)
    w.app_labels.push_back("App" + std::to_string(i + 1));

  if (config.n_variables >= 6)
    w.string_variables = {"HardwareRevision", "FirmwareVersion", "SerialNumber"};
  int n_numeric = std::max(0, config.n_variables - static_cast<int>(w.string_variables.size()));
  std::vector<std::string> numeric_vars;
  for (int i = 0; i < n_numeric; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "Var%02d", i + 1);
    numeric_vars.emplace_back(buf);
  }
  w.variable_labels = numeric_vars;
  w.variable_labels.insert(w.variable_labels.end(), w.string_variables.begin(),
                           w.string_variables.end());

  // Datatypes: numeric variables rotate INT/REAL/BYTE, the named ones are STRING.
  const char* numeric_types[] = {"INT", "REAL", "BYTE"};
  std::map<std::string, std::string> datatype;
  std::vector<std::string> real_vars;
  for (std::size_t i = 0; i < numeric_vars.size(); ++i) {
    datatype[numeric_vars[i]] = numeric_types[i % 3];
    if (i % 3 == 1) real_vars.push_back(numeric_vars[i]);
  }
  for (const std::string& v : w.string_variables) datatype[v] = "STRING";

  GraphBuilder b;
  auto part_of = [&](const std::string& member, const char* member_kind,
                     const std::string& whole, const char* whole_kind) {
    b.add_triple(member, "isPartOf", whole, member_kind, whole_kind);
  };
  part_of(w.plc_ip, kKindIp, "AutomationNetwork", kKindNetwork);
  part_of(w.historian_ip, kKindIp, "DevNetwork", kKindNetwork);
  for (const std::string& ip : w.dev_ips) part_of(ip, kKindIp, "DevNetwork", kKindNetwork);
  part_of(w.repo_ip, kKindIp, "EdgeNetwork", kKindNetwork);
  for (const std::string& ip : w.edge_ips) part_of(ip, kKindIp, "EdgeNetwork", kKindNetwork);
  for (const std::string& ip : w.public_ips) part_of(ip, kKindIp, "GlobalNet", kKindNetwork);

  for (const char* periph : {"Drive1", "Camera1", "HMI1", "IOSystem1"})
    b.add_triple(periph, "isPartOf", "PLC1", kKindInternalElement, kKindInternalElement);
  b.add_triple("OPCUAServer1", "isPartOf", "PLC1", kKindExternalInterface,
               kKindInternalElement);
  b.add_triple("PLC1", "hasAddress", w.plc_ip, kKindInternalElement, kKindIp);

  for (const std::string& v : w.variable_labels) {
    b.add_triple(v, "hasDataType", datatype[v], kKindVar, kKindDataType);
    b.add_triple(v, "exposedVia", "OPCUAServer1", kKindVar, kKindExternalInterface);
    b.add_triple(v, "isPartOf", "PLC1", kKindVar, kKindInternalElement);
  }

  for (std::size_t i = 0; i < w.app_labels.size(); ++i) {
    const std::string& host = w.edge_ips[i % w.edge_ips.size()];
    b.add_triple(w.app_labels[i], "hostedOn", host, kKindApp, kKindIp);
    w.profile.init_host[w.app_labels[i]] = host;
  }

  // Behavior profile.
  std::mt19937_64 rng(sub_seed(config.seed, 1));
  for (std::size_t i = 0; i < w.app_labels.size(); ++i) {
    const std::string& app = w.app_labels[i];
    std::vector<std::string>& reads = w.profile.readable[app];
    if (app == "App4") {
      // The sniffing candidate sticks to one numeric datatype.
      for (std::size_t k = 0; k < real_vars.size() && k < 3; ++k)
        reads.push_back(real_vars[k]);
    } else {
      std::uniform_int_distribution<int> n_reads(3, 5);
      int n = std::min<int>(n_reads(rng), static_cast<int>(numeric_vars.size()));
      std::vector<std::string> pool = numeric_vars;
      std::shuffle(pool.begin(), pool.end(), rng);
      reads.assign(pool.begin(), pool.begin() + n);
      std::sort(reads.begin(), reads.end());
    }
    std::vector<std::string>& writes = w.profile.writable[app];
    if (app != "App4" && app != "App5" && !reads.empty()) {
      std::uniform_int_distribution<int> n_writes(1, 2);
      int n = std::min<int>(n_writes(rng), static_cast<int>(reads.size()));
      std::vector<std::string> pool = reads;
      std::shuffle(pool.begin(), pool.end(), rng);
      writes.assign(pool.begin(), pool.begin() + n);
      std::sort(writes.begin(), writes.end());
    }
  }

  // Connection habits. The last public address is reserved so scenario 2.3
  // always produces an unseen pair.
  std::vector<std::string> usable_publics(w.public_ips.begin(),
                                          w.public_ips.end() - 1);
  for (const std::string& dev : w.dev_ips) {
    w.profile.conns.push_back({dev, w.historian_ip, "https", "443", 5, 6, 10.0});
    std::vector<std::string> pool = usable_publics;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<int> n_pub(2, 3);
    int n = std::min<int>(n_pub(rng), static_cast<int>(pool.size()));
    for (int k = 0; k < n; ++k)
      w.profile.conns.push_back({dev, pool[k], "https", "443", 2, 3, 3.0});
  }
  for (const std::string& edge : w.edge_ips)
    w.profile.conns.push_back({edge, w.repo_ip, "https", "443", 4, 4, 8.0});
  // Sporadic administrative SSH between dev hosts (never to the historian).
  for (int i = 0; i < 3 && i + 1 < static_cast<int>(w.dev_ips.size()); ++i)
    w.profile.conns.push_back(
        {w.dev_ips[i], w.dev_ips[i + 1], "ssh", "22", 3, 3, 1.0});

  w.graph = std::move(b).freeze();
  return w;
}

namespace {

template <typename Rng>
EventRecord sample_baseline_event(const World& w, Rng& rng) {
  std::uniform_real_distribution<double> mix(0.0, 1.0);
  double m = mix(rng);
  if (m < 0.45 && !w.profile.readable.empty()) {
    std::uniform_int_distribution<std::size_t> ai(0, w.app_labels.size() - 1);
    const std::string& app = w.app_labels[ai(rng)];
    const auto& reads = w.profile.readable.at(app);
    const auto& writes = w.profile.writable.at(app);
    if (!reads.empty()) {
      bool write = !writes.empty() && mix(rng) < 0.25;
      const auto& pool = write ? writes : reads;
      std::uniform_int_distribution<std::size_t> vi(0, pool.size() - 1);
      return make_data_event(app, pool[vi(rng)], write ? "write" : "read");
    }
  }
  if (m < 0.90 && !w.profile.conns.empty()) {
    std::vector<double> weights;
    weights.reserve(w.profile.conns.size());
    for (const ConnProfile& c : w.profile.conns) weights.push_back(c.weight);
    const ConnProfile& c = w.profile.conns[weighted_pick(rng, weights)];
    return make_conn_event(c.orig_ip, c.resp_ip, c.service, c.port,
                           sample_bytes(rng, c.bucket_lo, c.bucket_hi));
  }
  std::uniform_int_distribution<std::size_t> ai(0, w.app_labels.size() - 1);
  const std::string& app = w.app_labels[ai(rng)];
  return make_init_event(app, w.profile.init_host.at(app));
}

std::vector<EventRecord> sample_baseline(const World& w, int count,
                                         std::uint64_t stream) {
  std::mt19937_64 rng(sub_seed(w.config.seed, stream));
  std::vector<EventRecord> events;
  events.reserve(count);
  for (int i = 0; i < count; ++i) {
    EventRecord e = sample_baseline_event(w, rng);
    e.label = {};
    events.push_back(std::move(e));
  }
  return events;
}

}  // namespace

std::vector<EventRecord> generate_baseline(const World& world, const WorldConfig& config) {
  std::vector<EventRecord> events = sample_baseline(world, config.baseline_events, 2);
  for (std::size_t i = 0; i < events.size(); ++i)
    events[i].ts = static_cast<std::int64_t>(i);
  return events;
}

std::vector<EventRecord> inject_scenarios(const World& w, const WorldConfig& config) {
  std::mt19937_64 rng(sub_seed(config.seed, 3));
  std::vector<EventRecord> out;
  auto emit = [&](EventRecord e, const char* scenario) {
    e.label.anomalous = true;
    e.label.scenario = scenario;
    out.push_back(std::move(e));
  };
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw ConfigError("scenario injection requires " + what);
  };

  int n;
  if ((n = config.events_for("1.1")) > 0) {
    need(w.app_labels.size() >= 5, "App5");
    const std::string app = "App5";
    const auto& reads = w.profile.readable.at(app);
    need(!reads.empty(), "readable variables for App5");
    for (int i = 0; i < n; ++i)
      emit(make_data_event(app, reads[i % reads.size()], "write"), "1.1");
  }
  if ((n = config.events_for("1.2")) > 0) {
    need(w.app_labels.size() >= 4, "App4");
    for (int i = 0; i < n; ++i)
      emit(make_data_event("App4", w.string_variables[i % w.string_variables.size()],
                           "read"),
           "1.2");
  }
  if ((n = config.events_for("2.1")) > 0) {
    need(!w.edge_ips.empty(), "an edge server");
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.edge_ips[0], w.historian_ip, "https", "443",
                           sample_bytes(rng, 4, 4)),
           "2.1");
  }
  if ((n = config.events_for("2.2")) > 0) {
    need(w.edge_ips.size() >= 2 && w.public_ips.size() >= 2, "edge servers and public IPs");
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.edge_ips[1], w.public_ips[i % (w.public_ips.size() - 1)],
                           "https", "443", sample_bytes(rng, 2, 3)),
           "2.2");
  }
  if ((n = config.events_for("2.3")) > 0) {
    need(w.dev_ips.size() >= 2 && !w.public_ips.empty(), "dev hosts and public IPs");
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.dev_ips[1], w.public_ips.back(), "https", "443",
                           sample_bytes(rng, 5, 6)),
           "2.3");
  }
  if ((n = config.events_for("3.1")) > 0) {
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.historian_ip, w.repo_ip, "ssh", "22",
                           sample_bytes(rng, 3, 3)),
           "3.1");
  }
  if ((n = config.events_for("3.2")) > 0) {
    need(!w.dev_ips.empty() && !w.edge_ips.empty(), "dev hosts and edge servers");
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.dev_ips[0], w.edge_ips[i % w.edge_ips.size()], "ssh",
                           "22", sample_bytes(rng, 2, 2)),
           "3.2");
  }
  if ((n = config.events_for("3.3")) > 0) {
    need(w.edge_ips.size() >= 3, "three edge servers");
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.edge_ips[2], w.edge_ips[i % 2], "ssh", "22",
                           sample_bytes(rng, 2, 2)),
           "3.3");
  }
  if ((n = config.events_for("4.1")) > 0) {
    need(w.app_labels.size() >= 3 && !w.dev_ips.empty(), "App3 and dev hosts");
    for (int i = 0; i < n; ++i)
      emit(make_init_event("App3", w.dev_ips[i % std::min<std::size_t>(w.dev_ips.size(), 2)]),
           "4.1");
  }
  if ((n = config.events_for("5.1")) > 0) {
    need(w.dev_ips.size() >= 3, "a third dev host");
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.dev_ips[2], w.historian_ip, "ssh", "22",
                           sample_bytes(rng, 0, 0)),
           "5.1");
  }
  if ((n = config.events_for("5.2")) > 0) {
    need(w.dev_ips.size() >= 4, "a fourth dev host");
    for (int i = 0; i < n; ++i)
      emit(make_conn_event(w.dev_ips[3], w.unassigned_ip, "https", "443",
                           sample_bytes(rng, 0, 0)),
           "5.2");
  }
  return out;
}

std::vector<EventRecord> simulate(const World& world, const WorldConfig& config) {
  std::vector<EventRecord> events = generate_baseline(world, config);
  std::int64_t window_start = config.baseline_events;
  std::int64_t window_len = std::max(1, config.test_baseline_events);

  std::vector<EventRecord> test = sample_baseline(world, config.test_baseline_events, 4);
  for (std::size_t i = 0; i < test.size(); ++i)
    test[i].ts = window_start + static_cast<std::int64_t>(i);

  std::vector<EventRecord> attacks = inject_scenarios(world, config);
  std::mt19937_64 rng(sub_seed(config.seed, 5));
  std::uniform_int_distribution<std::int64_t> tick(window_start,
                                                   window_start + window_len - 1);
  for (EventRecord& e : attacks) e.ts = tick(rng);

  test.insert(test.end(), std::make_move_iterator(attacks.begin()),
              std::make_move_iterator(attacks.end()));
  std::stable_sort(test.begin(), test.end(),
                   [](const EventRecord& a, const EventRecord& b) { return a.ts < b.ts; });
  events.insert(events.end(), std::make_move_iterator(test.begin()),
                std::make_move_iterator(test.end()));

  for (std::size_t i = 0; i < events.size(); ++i) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "ev%06zu", i);
    events[i].event_id = buf;
  }
  return events;
}

LabelTriple primary_link(const EventRecord& e) {
  auto attr = [&](const char* key) -> const std::string& {
    auto it = e.attrs.find(key);
    if (it == e.attrs.end())
      throw DataError("event " + e.event_id + " missing attribute '" + key + "'");
    return it->second;
  };
  switch (e.kind) {
    case EventKind::data_event: {
      const std::string& op = attr("operation");
      if (op != "read" && op != "write")
        throw DataError("event " + e.event_id + " has unknown operation '" + op + "'");
      return {attr("client"), op == "read" ? "reads" : "writes", attr("variable")};
    }
    case EventKind::net_conn: {
      const std::string& svc = attr("service");
      if (svc != "https" && svc != "ssh")
        throw DataError("event " + e.event_id + " has unknown service '" + svc + "'");
      return {attr("orig_ip"), "connectsTo_" + svc, attr("resp_ip")};
    }
    case EventKind::init_event:
      return {attr("client"), "initiatedFrom", attr("server_ip")};
  }
  throw DataError("unreachable event kind");
}

EventGraph events_to_graph(const TypedGraph& world_graph,
                           const std::vector<EventRecord>& events,
                           const EventGraphOptions& options) {
  GraphBuilder b(world_graph);
  EventGraph out;
  for (const EventRecord& e : events) {
    LabelTriple link = primary_link(e);
    EventMapping mapping{};
    const char* s_kind = e.kind == EventKind::net_conn ? kKindIp : kKindApp;
    const char* o_kind = e.kind == EventKind::data_event ? kKindVar : kKindIp;
    if (options.include_primary_links) {
      mapping.primary = b.add_triple(link.subject, link.relation, link.object,
                                     s_kind, o_kind);
    } else {
      mapping.primary = {b.intern_entity(link.subject, s_kind),
                         b.intern_relation(link.relation),
                         b.intern_entity(link.object, o_kind)};
    }
    if (options.include_individuals) {
      auto attr = [&](const char* key) -> const std::string& {
        return e.attrs.at(key);
      };
      switch (e.kind) {
        case EventKind::data_event: {
          const char* ind_kind = "DataEvent";
          mapping.individual = b.intern_entity(e.event_id, ind_kind);
          b.add_triple(e.event_id, "data_event_client", attr("client"), ind_kind, kKindApp);
          b.add_triple(e.event_id, "data_event_variable", attr("variable"), ind_kind,
                       kKindVar);
          b.add_triple(e.event_id, "data_event_operation",
                       attr("operation") == "read" ? "ReadOp" : "WriteOp", ind_kind,
                       kKindOperation);
          break;
        }
        case EventKind::net_conn: {
          const char* ind_kind = "ConnEvent";
          mapping.individual = b.intern_entity(e.event_id, ind_kind);
          b.add_triple(e.event_id, "id.orig_h", attr("orig_ip"), ind_kind, kKindIp);
          b.add_triple(e.event_id, "id.resp_h", attr("resp_ip"), ind_kind, kKindIp);
          b.add_triple(e.event_id, "service", attr("service"), ind_kind, kKindService);
          b.add_triple(e.event_id, "id.resp_p", attr("resp_port") + ".0", ind_kind,
                       kKindPort);
          std::uint64_t bytes = 0;
          try {
            bytes = std::stoull(attr("orig_bytes"));
          } catch (const std::exception&) {
            throw DataError("event " + e.event_id + " has bad orig_bytes");
          }
          b.add_triple(e.event_id, "orig_bytes", volume_bucket_label(bytes), ind_kind,
                       kKindBucket);
          break;
        }
        case EventKind::init_event: {
          const char* ind_kind = "InitEvent";
          mapping.individual = b.intern_entity(e.event_id, ind_kind);
          b.add_triple(e.event_id, "init_client", attr("client"), ind_kind, kKindApp);
          b.add_triple(e.event_id, "init_server", attr("server_ip"), ind_kind, kKindIp);
          break;
        }
      }
    }
    out.by_event_id.emplace(e.event_id, mapping);
  }
  out.graph = std::move(b).freeze();
  return out;
}

void write_events_jsonl(std::ostream& out, const std::vector<EventRecord>& events) {
  for (const EventRecord& e : events) {
    nlohmann::json j;
    j["event_id"] = e.event_id;
    j["kind"] = to_string(e.kind);
    j["ts"] = e.ts;
    j["attrs"] = e.attrs;
    j["label"]["status"] = e.label.anomalous ? "anomalous" : "baseline";
    if (e.label.anomalous)
      j["label"]["scenario"] = e.label.scenario;
    else
      j["label"]["scenario"] = nullptr;
    out << j.dump() << '\n';
  }
}

std::vector<EventRecord> read_events_jsonl(std::istream& in) {
  std::vector<EventRecord> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& ex) {
      throw DataError("events line " + std::to_string(line_no) + ": " + ex.what());
    }
    EventRecord e;
    try {
      e.event_id = j.at("event_id").get<std::string>();
      e.kind = event_kind_from_string(j.at("kind").get<std::string>());
      e.ts = j.at("ts").get<std::int64_t>();
      for (const auto& [k, v] : j.at("attrs").items())
        e.attrs[k] = v.get<std::string>();
      const auto& label = j.at("label");
      e.label.anomalous = label.at("status").get<std::string>() == "anomalous";
      if (e.label.anomalous) e.label.scenario = label.at("scenario").get<std::string>();
    } catch (const nlohmann::json::exception& ex) {
      throw DataError("events line " + std::to_string(line_no) + ": " + ex.what());
    }
    events.push_back(std::move(e));
  }
  return events;
}

}  // namespace kgsentry::sim
