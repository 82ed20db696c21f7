#include <eform/graded/vector_field.hpp>

#include <fmt/format.h>

#include <eform/errors.hpp>

namespace eform::graded {

GradedVectorField::GradedVectorField(ContextPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}

void GradedVectorField::set(Coordinate c, GradedElement image)
{
    Degree d = image.degree();
    int want = ctx_->degree(c) + degree_;
    if (!d.is(want))
        throw ShapeError(fmt::format("image of '{}' is not of degree {}", ctx_->name(c), want));
    if (image.is_zero())
        images_.erase(c);
    else
        images_.insert_or_assign(c, std::move(image));
}

GradedElement GradedVectorField::image(Coordinate c) const
{
    auto it = images_.find(c);
    return it == images_.end() ? GradedElement(ctx_) : it->second;
}

GradedElement GradedVectorField::apply(const GradedElement& f) const
{
    GradedElement out(ctx_);
    for (const auto& [c, img] : images_) {
        GradedElement d = f.left_derivative(c);
        if (!d.is_zero())
            out += img * d;
    }
    return out;
}

GradedVectorField GradedVectorField::operator+(const GradedVectorField& o) const
{
    if (o.degree_ != degree_)
        throw ShapeError("adding vector fields of different degrees");
    GradedVectorField out = *this;
    for (const auto& [c, img] : o.images_)
        out.set(c, out.image(c) + img);
    return out;
}

GradedVectorField GradedVectorField::operator*(const poly::Rational& k) const
{
    GradedVectorField out(ctx_, degree_);
    for (const auto& [c, img] : images_)
        out.set(c, img * k);
    return out;
}

GradedVectorField GradedVectorField::commutator(const GradedVectorField& x, const GradedVectorField& y)
{
    GradedVectorField out(x.ctx_, x.degree_ + y.degree_);
    int sign = (x.degree_ * y.degree_) % 2 ? -1 : 1;
    for (Coordinate c : x.ctx_->coordinates())
        out.set(c, x.apply(y.image(c)) - poly::Rational(sign) * y.apply(x.image(c)));
    return out;
}

Verdict GradedVectorField::check_square_zero(const std::string& label) const
{
    Verdict v;
    for (Coordinate c : ctx_->coordinates()) {
        GradedElement r = apply(image(c));
        if (!r.is_zero())
            v.fail(fmt::format("{}({})", label, ctx_->name(c)), r.to_string());
    }
    return v;
}

}  // namespace eform::graded
