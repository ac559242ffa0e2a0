/**
 * Copyright 2026 The qtheta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qtheta/formal/gaussian_rational.hpp"

#include "qtheta/error.hpp"

namespace qtheta::formal {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  const bool a_real = sgn(a.im_) == 0;
  const bool b_real = sgn(b.im_) == 0;
  if (a_real && b_real) {
    re_ += a.re_ * b.re_;
  } else if (a_real) {
    re_ += a.re_ * b.re_;
    im_ += a.re_ * b.im_;
  } else if (b_real) {
    re_ += a.re_ * b.re_;
    im_ += a.im_ * b.re_;
  } else {
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
  }
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ContractError("division by zero Gaussian rational");
  const mpq_class norm = re_ * re_ + im_ * im_;
  return GaussianRational(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string out;
  if (has_re) out = re_.get_str();
  std::string im;
  if (im_ == 1) {
    im = "";
  } else if (im_ == -1) {
    im = "-";
  } else {
    im = im_.get_str();
  }
  if (has_re && sgn(im_) > 0) out += "+";
  return out + im + "i";
}

}  // namespace qtheta::formal
