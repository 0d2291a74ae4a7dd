#include "dtgw/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dtgw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("Partition: bad part '" + tok + "'");
            }
            if (used != tok.size())
                throw std::invalid_argument("Partition: bad part '" + tok + "'");
            parts.push_back(v);
        }
        if (text.back() == ',') throw std::invalid_argument("Partition: trailing comma");
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::transpose() const {
    std::vector<int> t;
    if (!parts_.empty()) {
        t.assign(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(t));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < part(i); ++j) out.push_back({i, j});
    return out;
}

long hook_length(const Partition& lambda, int i, int j) {
    if (!lambda.contains(i, j)) throw std::invalid_argument("hook_length: cell outside diagram");
    Partition t = lambda.transpose();
    return (lambda.part(i) - j) + (t.part(j) - i) - 1;
}

long b2(const Partition& lambda) {
    long s = 0;
    for (int p : lambda.parts()) s += static_cast<long>(p) * (p - 1) / 2;
    return s;
}

long leg_weight(const Partition& lambda) {
    return lambda.size() + b2(lambda) + b2(lambda.transpose());
}

namespace {

void enumerate_rec(int remaining, int cap, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(cap, remaining); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> prefix;
    enumerate_rec(n, n, prefix, out);
    return out;
}

}  // namespace dtgw
