#include "ordext/linear_order.hpp"

namespace ordext {

StrictRelation LinearOrder::induced_pairs() const {
    StrictRelation out;
    const auto& s = sequence();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) out.emplace(s[i], s[j]);
    return out;
}

LinearOrder order_from_enumeration(std::vector<ElementId> sequence) {
    return LinearOrder(Ground(std::move(sequence)));
}

} // namespace ordext
