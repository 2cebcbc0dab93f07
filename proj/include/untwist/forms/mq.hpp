#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "untwist/forms/lens.hpp"
#include "untwist/numeric/form2.hpp"
#include "untwist/numeric/rational.hpp"
#include "untwist/obstruction.hpp"

namespace untwist {

using Vec2 = std::array<std::int64_t, 2>;

struct CosetMin {
    Vec2 key;             // adj(Q) v mod det, identifies the coset of v in Z^2 / Q Z^2
    Vec2 label;           // a short representative, (0, i) when one exists
    Vec2 covector;        // a minimizing characteristic covector
    std::int64_t order;   // order of the coset in the group
    Rational value;       // m_Q
};

struct MqTable {
    Form2 form;
    std::vector<CosetMin> cosets;  // sorted by label

    Vec2 key_of(const Vec2& v) const;
    const CosetMin& at(const Vec2& v) const;
};

// m_Q over characteristic covectors in -Q_ii - widen <= xi_i <= Q_ii - 2 + widen.
// Cosets are keyed by xi when det is odd and by (xi - (a mod 2)(1,1)) / 2 when it is even.
MqTable m_q(const Form2& q, std::int64_t widen = 0);

// Hall-matching test of Thm "dinvbound" without fixing the isomorphism.
ObstructionResult d_match_check(const DSpectrum& spectrum, const MqTable& mq);

}  // namespace untwist
