#pragma once

#include "mvtop/offdiag/off_diagonal.hpp"
#include "mvtop/squares/msquare.hpp"
#include "mvtop/transfers/correspondence.hpp"

#include <optional>

namespace mvtop {

/// Components of M x P whose images along a and b are alpha1 and alpha2.
std::vector<ElemCorr> lift_into(const AdmissibleMorphism& a, const AdmissibleMorphism& b, const ElemCorr& alpha1,
                                const ElemCorr& alpha2, const ModulusPair& m);

/// gamma: M -> T00 with q(gamma) = alpha1, v(gamma) = alpha2. Throws NoLift
/// when u(alpha1) and p(alpha2) differ or nothing lies over both.
ElemCorr rho_lift(const ElemCorr& alpha1, const ElemCorr& alpha2, const MSquare& t, const ModulusPair& m);

/// Off-diagonal data of a square, computed once and shared across lifts.
class MvLiftContext {
public:
    MvLiftContext(MSquare t, ModulusPair m);

    [[nodiscard]] const MSquare& square() const { return t_; }
    [[nodiscard]] const ModulusPair& source() const { return m_; }
    /// OD(q) ~ OD(p); throws InconsistentInput when the induced map is not
    /// an isomorphism.
    void require_od() const;
    [[nodiscard]] const OffDiagonal& od_q() const;
    [[nodiscard]] const OffDiagonal& od_p() const;
    [[nodiscard]] const AdmissibleMorphism& od_inverse() const;

private:
    MSquare t_;
    ModulusPair m_;
    mutable bool od_done_ = false;
    mutable std::optional<OffDiagonal> odq_;
    mutable std::optional<OffDiagonal> odp_;
    mutable std::optional<AdmissibleMorphism> inverse_;
    mutable std::string od_failure_;
};

struct MvLift {
    Corr gamma;
    bool unique = false;          // v is an interior open immersion
    std::size_t via_rho = 0;      // components lifted against beta
    std::size_t via_od = 0;       // components lifted through OD(q) ~ OD(p)
};

/// gamma with v(gamma) = alpha and q(gamma) = beta. Throws InconsistentInput
/// when p(alpha) != u(beta) or a needed OD identification is missing,
/// NoLift when a component does not lift admissibly.
MvLift mv_lift(const Corr& alpha, const Corr& beta, const MvLiftContext& ctx);
MvLift mv_lift(const Corr& alpha, const Corr& beta, const MSquare& t, const ModulusPair& m);

} // namespace mvtop
