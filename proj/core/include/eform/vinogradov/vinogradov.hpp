#pragma once

#include <cstdint>

#include <eform/compat/compat.hpp>

namespace eform::vinogradov {

using algebroid::EForm;
using algebroid::ESection;
using algebroid::LieAlgebroidData;
using compat::BaseForm;
using compat::PreNPlectic;

// u + alpha in E (+) wedge^{n-1} E*.
struct VinSection {
    ESection vec;
    EForm form;

    bool operator==(const VinSection& o) const { return vec == o.vec && form == o.form; }
    std::string to_string() const;
};

VinSection operator+(const VinSection& a, const VinSection& b);
VinSection operator-(const VinSection& a, const VinSection& b);

// <u+a, v+b> = i_u b + i_v a. Requires n >= 2.
EForm vin_inner(const VinSection& s1, const VinSection& s2);

// [[u+a, v+b]] = [u,v] + L_u b - i_v da + W(u, v, ...), W = i_rho^{n+1} w, with u, v
// inserted into the first two slots. The raw overload accepts non-closed forms.
VinSection dorfman(const VinSection& s1, const VinSection& s2, const BaseForm& omega, const LieAlgebroidData& data);
VinSection dorfman(const VinSection& s1, const VinSection& s2, const PreNPlectic& omega, const LieAlgebroidData& data);

// u + i_u J.
VinSection graph_section(const ESection& u, const EForm& j);

struct SampleOptions {
    int samples = 50;
    std::uint64_t seed = 7;
};

// [[a,[[b,c]]]] = [[[[a,b]],c]] + [[b,[[a,c]]]] on all frame triples and on random
// polynomial triples. The first failing triple is reported with its residual.
Verdict check_leibniz(const BaseForm& omega, const LieAlgebroidData& data, const SampleOptions& opts = {});

// Isotropy (n >= 2) and involutivity of the graph of J over frame and random
// sections; the involutivity residual for (u, v) is (dJ + W)(u, v, ...).
Verdict check_higher_dirac(const EForm& j, const PreNPlectic& omega, const LieAlgebroidData& data,
                           const SampleOptions& opts = {});

}  // namespace eform::vinogradov
