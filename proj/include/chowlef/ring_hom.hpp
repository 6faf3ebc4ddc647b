#pragma once

#include <stdexcept>
#include <vector>

#include "chowlef/element.hpp"

namespace chowlef {

/// Ring homomorphism determined by generator images, applied term by term.
/// Images are multiplied in declared generator order, which is the order the
/// source monomial abbreviates, so odd signs come out right.
inline RingElement apply_hom(const RingElement& x, const PresPtr& target,
                             const std::vector<RingElement>& images) {
    const RingPresentation& src = *x.presentation();
    if (images.size() != src.generator_count())
        throw std::invalid_argument("apply_hom: one image per source generator required");
    for (const RingElement& img : images)
        if (img.presentation().get() != target.get())
            throw std::invalid_argument("apply_hom: image lies in the wrong presentation");

    RingElement out = RingElement::zero(target);
    for (const auto& [m, c] : x.terms()) {
        RingElement acc = RingElement::one(target);
        for (std::size_t i = 0; i < src.generator_count() && !acc.is_zero(); ++i)
            if (m.exp(i) > 0) acc = acc * images[i].pow(m.exp(i));
        out = out + acc * c;
    }
    return out;
}

}  // namespace chowlef
