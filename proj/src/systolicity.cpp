#include "systolic/systolicity.hpp"

namespace systolic {

std::string to_string(SystolicVerdict v)
{
    switch (v) {
    case SystolicVerdict::Systolic: return "systolic";
    case SystolicVerdict::NotLocally6Large: return "not-locally-6-large";
    case SystolicVerdict::NotSimplyConnected: return "not-simply-connected";
    case SystolicVerdict::Disconnected: return "disconnected";
    case SystolicVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

SystolicReport check_systolic(const FlagComplex& complex, std::size_t budget)
{
    SystolicReport r;
    if (!is_connected(complex)) {
        r.verdict = SystolicVerdict::Disconnected;
        return r;
    }
    auto local = is_locally_6_large(complex);
    if (!local) {
        r.verdict = SystolicVerdict::NotLocally6Large;
        r.link_vertex = local.vertex;
        r.link_cycle = local.cycle;
        return r;
    }
    r.simple_connectivity = is_simply_connected_bounded(complex, budget);
    switch (r.simple_connectivity.verdict) {
    case Tristate::Yes: r.verdict = SystolicVerdict::Systolic; break;
    case Tristate::No:
        r.verdict = SystolicVerdict::NotSimplyConnected;
        r.loop = r.simple_connectivity.witness_loop;
        break;
    case Tristate::Unknown: r.verdict = SystolicVerdict::Unknown; break;
    }
    return r;
}

}  // namespace systolic
