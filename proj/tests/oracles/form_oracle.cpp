#include "form_oracle.hpp"

namespace oracle {

using eform::algebroid::BaseForm;
using eform::algebroid::EForm;
using eform::algebroid::Index;
using eform::algebroid::increasing_tuples;
using eform::poly::Polynomial;

BaseForm exterior_derivative(const BaseForm& w)
{
    BaseForm out(w.vars(), w.dim(), w.arity() + 1);
    for (const auto& idx : increasing_tuples(w.dim(), w.arity() + 1)) {
        Polynomial total(w.vars());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Index rest;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != j)
                    rest.push_back(idx[k]);
            Polynomial t = w.at(rest).partial_derivative(idx[j]);
            total += j % 2 ? -t : t;
        }
        out.add(idx, total);
    }
    return out;
}

EForm chevalley_eilenberg(const EForm& alpha, const eform::algebroid::LieAlgebroidData& lie)
{
    std::size_t r = lie.rank();
    EForm out(alpha.vars(), r, alpha.arity() + 1);
    for (const auto& idx : increasing_tuples(r, alpha.arity() + 1)) {
        Polynomial total(alpha.vars());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            for (std::size_t j = i + 1; j < idx.size(); ++j) {
                Index rest;
                for (std::size_t k = 0; k < idx.size(); ++k)
                    if (k != i && k != j)
                        rest.push_back(idx[k]);
                for (std::size_t c = 0; c < r; ++c) {
                    Index full{c};
                    full.insert(full.end(), rest.begin(), rest.end());
                    Polynomial t = lie.structure(c, idx[i], idx[j]) * alpha.at(full);
                    total += (i + j) % 2 ? -t : t;
                }
            }
        }
        out.add(idx, total);
    }
    return out;
}

}  // namespace oracle
