#include "vc4/harness/trace_json.hpp"

namespace vc4::harness {

nlohmann::ordered_json to_json(const TraceEvent &event) {
    nlohmann::ordered_json j;
    switch (event.kind) {
    case TraceKind::Branch:
        j["event"] = "branch";
        j["rule"] = std::string(to_string(event.rule));
        j["mu_before"] = event.mu_before;
        j["decreases"] = event.decreases;
        j["marked"] = event.marked;
        break;
    case TraceKind::Reduce:
        j["event"] = "reduce";
        j["rule"] = std::string(to_string(event.rule));
        j["mu_before"] = event.mu_before;
        j["mu_delta"] = event.decreases.empty() ? 0 : -event.decreases.front();
        break;
    case TraceKind::Invariant:
        j["event"] = "invariant";
        j["mu_before"] = event.mu_before;
        break;
    }
    j["ok"] = event.ok;
    if (!event.detail.empty())
        j["detail"] = event.detail;
    return j;
}

void JsonLinesSink::record(const TraceEvent &event) {
    out_ << to_json(event).dump() << '\n';
    if (!out_)
        throw std::ios_base::failure("trace sink write failed");
}

}  // namespace vc4::harness
