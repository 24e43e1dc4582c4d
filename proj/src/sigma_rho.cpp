#include <algorithm>

#include "domlab/error.hpp"
#include "domlab/partition.hpp"

namespace domlab {

SigmaRhoSpec::SigmaRhoSpec(std::vector<int> finite_members, std::optional<int> cofinite_from)
    : finite_(std::move(finite_members)), cofinite_(cofinite_from) {
    if (cofinite_ && *cofinite_ < 0) throw Error(ErrorCode::InvalidArgument, "negative cofinite threshold");
    for (int c : finite_)
        if (c < 0) throw Error(ErrorCode::InvalidArgument, "negative member in a count set");
    std::sort(finite_.begin(), finite_.end());
    finite_.erase(std::unique(finite_.begin(), finite_.end()), finite_.end());
    if (cofinite_) std::erase_if(finite_, [t = *cofinite_](int c) { return c >= t; });
}

std::vector<SigmaRhoSpec> SigmaRhoSpec::menu() { return {naturals(), positive(), zero(), one(), zero_one()}; }

SigmaRhoSpec SigmaRhoSpec::parse(std::string_view token) {
    if (token == "N") return naturals();
    if (token == "N+") return positive();
    if (token == "0") return zero();
    if (token == "1") return one();
    if (token == "01") return zero_one();
    throw Error(ErrorCode::ParseError, "unknown count-set token '" + std::string(token) + "' (expected N, N+, 0, 1, 01)");
}

std::string SigmaRhoSpec::token() const {
    if (*this == naturals()) return "N";
    if (*this == positive()) return "N+";
    if (*this == zero()) return "0";
    if (*this == one()) return "1";
    if (*this == zero_one()) return "01";
    std::string out = "{";
    for (std::size_t i = 0; i < finite_.size(); ++i) out += (i ? "," : "") + std::to_string(finite_[i]);
    if (cofinite_) out += std::string(finite_.empty() ? "" : ",") + ">=" + std::to_string(*cofinite_);
    return out + "}";
}

bool SigmaRhoSpec::contains(int count) const {
    if (cofinite_ && count >= *cofinite_) return true;
    return std::binary_search(finite_.begin(), finite_.end(), count);
}

std::optional<int> SigmaRhoSpec::first_at_least(int lo) const {
    auto it = std::lower_bound(finite_.begin(), finite_.end(), lo);
    if (it != finite_.end()) return *it;
    if (cofinite_) return std::max(lo, *cofinite_);
    return std::nullopt;
}

std::optional<int> SigmaRhoSpec::last_at_most(int hi) const {
    if (hi < 0) return std::nullopt;
    if (cofinite_ && hi >= *cofinite_) return hi;
    auto it = std::upper_bound(finite_.begin(), finite_.end(), hi);
    if (it == finite_.begin()) return std::nullopt;
    return *std::prev(it);
}

bool SigmaRhoSpec::meets(int lo, int hi) const {
    auto x = first_at_least(lo);
    return x && *x <= hi;
}

Monotonicity classify(const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho) {
    if (rho.contains(0)) return Monotonicity::Minimum;
    auto upward_closed = [](const SigmaRhoSpec& s) { return s.finite_members().empty() && s.cofinite_from(); };
    if (upward_closed(sigma) && upward_closed(rho)) return Monotonicity::Maximum;
    return Monotonicity::Neither;
}

bool is_sigma_rho_set(const Graph& g, std::span<const Vertex> set, const SigmaRhoSpec& sigma,
                      const SigmaRhoSpec& rho) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : set) {
        if (!g.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        int inside = 0;
        for (Vertex w : g.neighbors(v)) inside += in[static_cast<std::size_t>(w)];
        const bool ok = in[static_cast<std::size_t>(v)] ? sigma.contains(inside) : rho.contains(inside);
        if (!ok) return false;
    }
    return true;
}

bool check_partition(const Graph& g, const Partition& p, const SigmaRhoSpec& sigma, const SigmaRhoSpec& rho) {
    if (p.class_of.size() != static_cast<std::size_t>(g.order()))
        throw Error(ErrorCode::PartitionMismatch, "partition covers " + std::to_string(p.class_of.size()) +
                                                      " vertices, graph has " + std::to_string(g.order()));
    for (int c : p.class_of)
        if (c < 0 || c >= p.k) throw Error(ErrorCode::PartitionMismatch, "class index " + std::to_string(c) + " outside 0..k-1");
    for (const auto& cls : p.classes())
        if (!is_sigma_rho_set(g, cls, sigma, rho)) return false;
    return true;
}

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Yes: return "YES";
        case SolveStatus::No: return "NO";
        case SolveStatus::TimedOut: return "TIMEOUT";
    }
    return "?";
}

}  // namespace domlab
