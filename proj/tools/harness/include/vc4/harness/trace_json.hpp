#pragma once

#include <ostream>
#include <vector>

#include <json.hpp>

#include "vc4/trace.hpp"

namespace vc4::harness {

/// {"event":"branch","rule":"R11","mu_before":17,"decreases":[5,9,8],
///  "marked":[false,false,false],"ok":true}; reductions carry "mu_delta".
nlohmann::ordered_json to_json(const TraceEvent &event);

/// Writes one JSON object per line.
class JsonLinesSink : public TraceSink {
public:
    explicit JsonLinesSink(std::ostream &out) : out_(out) {}
    void record(const TraceEvent &event) override;

private:
    std::ostream &out_;
};

class CollectingSink : public TraceSink {
public:
    void record(const TraceEvent &event) override { events.push_back(event); }
    std::vector<TraceEvent> events;
};

}  // namespace vc4::harness
