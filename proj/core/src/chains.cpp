#include "acgw/chains.hpp"

namespace acgw {

std::string format_violations(const std::vector<Violation>& v) {
    std::ostringstream os;
    for (const auto& x : v) os << "degree " << x.degree << ": " << x.message << '\n';
    return os.str();
}

}  // namespace acgw
