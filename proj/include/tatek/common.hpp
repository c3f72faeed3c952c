#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tatek {

using i64 = std::int64_t;
using Int = boost::multiprecision::cpp_int;

// Dense integer lattice types. Weights are stored in fundamental-weight
// coordinates, coweights in simple-coroot coordinates; the natural pairing
// of the two bases is the plain dot product.
using IntVec = Eigen::Matrix<i64, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;

struct LexLess {
    bool operator()(const IntVec& a, const IntVec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline bool lex_eq(const IntVec& a, const IntVec& b) {
    return a.size() == b.size() && a == b;
}

// Domain errors carry a stable kind name that the CLI surfaces verbatim.
class DomainError : public std::runtime_error {
  public:
    DomainError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + (msg.empty() ? "" : ": " + msg)),
          kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

#define TATEK_DOMAIN_ERROR(Name)                           \
    struct Name : DomainError {                            \
        explicit Name(const std::string& msg = "")         \
            : DomainError(#Name, msg) {}                   \
    }

TATEK_DOMAIN_ERROR(NonUnitLeadingCoefficient);
TATEK_DOMAIN_ERROR(BeyondTruncation);
TATEK_DOMAIN_ERROR(NotFiniteType);
TATEK_DOMAIN_ERROR(WeylGroupTooLarge);
TATEK_DOMAIN_ERROR(NotDominant);
TATEK_DOMAIN_ERROR(NotStronglyRegular);
TATEK_DOMAIN_ERROR(NotPositive);
TATEK_DOMAIN_ERROR(TorusHasNoSigma);
TATEK_DOMAIN_ERROR(OrderTooSmall);
TATEK_DOMAIN_ERROR(RankNotOne);
TATEK_DOMAIN_ERROR(NotStabilized);
TATEK_DOMAIN_ERROR(NotRegular);
TATEK_DOMAIN_ERROR(LevelTooSmall);
TATEK_DOMAIN_ERROR(NotIntegrable);
TATEK_DOMAIN_ERROR(DivisionStuck);
TATEK_DOMAIN_ERROR(BijectionFailed);

#undef TATEK_DOMAIN_ERROR

}  // namespace tatek
