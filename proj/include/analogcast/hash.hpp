#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace analogcast {

// Incremental FNV-1a (64 bit). Used for cache keys and provenance tags, not
// for anything security related.
class ContentHash {
public:
    ContentHash& bytes(const void* data, std::size_t size);
    ContentHash& text(std::string_view s);
    ContentHash& u64(std::uint64_t v);
    ContentHash& i64(std::int64_t v);
    ContentHash& f64(double v);
    ContentHash& values(std::span<const double> v);
    ContentHash& matrix(const Eigen::MatrixXd& m);

    std::uint64_t digest() const { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ull;
};

std::string hex_digest(std::uint64_t h);

} // namespace analogcast
