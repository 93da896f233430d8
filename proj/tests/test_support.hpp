#pragma once

#include <vector>

#include "affinelab/affine.hpp"
#include "affinelab/catalog.hpp"
#include "affinelab/group.hpp"
#include "affinelab/semibrace.hpp"

namespace aflab::testing {

// A small corpus of verified structures that the property tests sweep over.
inline std::vector<AffineStructure> affine_corpus() {
    std::vector<AffineStructure> out;
    out.push_back(trivial_affine(make_cyclic(1)));
    out.push_back(trivial_affine(make_cyclic(4)));
    out.push_back(trivial_affine(make_symmetric(3)));
    for (int m : {2, 4, 6}) out.push_back(inverse_translation_affine(make_cyclic(m)));
    out.push_back(inverse_translation_affine(make_symmetric(3)));
    for (int m : {2, 4, 6, 8}) {
        out.push_back(sign_flip_affine(m));
        out.push_back(parity_twist_affine(m));
    }
    {
        FiniteGroup C6 = make_cyclic(6);
        std::vector<int> img(6);
        for (int k = 0; k < 6; ++k) img[static_cast<size_t>(k)] = (4 * k) % 6;
        out.push_back(constant_endomorphism_affine(C6, SelfMap(6, img)));
    }
    {
        FiniteGroup S3 = make_symmetric(3);
        SelfMap zero(6, std::vector<int>(6, S3.identity()));
        out.push_back(constant_endomorphism_affine(S3, zero));
        out.push_back(conjugation_affine(S3, SelfMap::identity(6)));
        out.push_back(conjugation_affine(S3, zero));
    }
    out.push_back(e7_conjugation_structure());
    return out;
}

inline std::vector<SemiBrace> semibrace_corpus() {
    std::vector<SemiBrace> out;
    for (const auto& A : affine_corpus()) out.push_back(semibrace_from_affine(A));
    out.push_back(trivial_skew_brace(make_dihedral(4)));
    out.push_back(almost_trivial_skew_brace(make_symmetric(3)));
    out.push_back(trivial_skew_brace(make_quaternion()));
    return out;
}

}  // namespace aflab::testing
