/*
Copyright 2026 The expsig Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "serialize.hpp"

#include "error.hpp"

namespace expsig {

Json poly_to_json(const Poly2& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e.i, e.j, to_string(c)}));
  return arr;
}

Poly2 poly_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kInvalidArgument, "polynomial must be a JSON array");
  Poly2 p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) fail(ErrorCode::kInvalidArgument, "polynomial term must be [i, j, \"num/den\"]");
    const int i = t[0].get<int>(), jj = t[1].get<int>();
    if (i < 0 || jj < 0) fail(ErrorCode::kInvalidArgument, "negative exponent");
    p.add_term(i, jj, parse_rat(t[2].get<std::string>()));
  }
  return p;
}

Json tensor_to_json(const TensorPoly& t) {
  Json entries = Json::object();
  for (std::size_t w = 0; w < t.entries.size(); ++w) entries[word_string(w, t.level)] = poly_to_json(t.entries[w]);
  return Json{{"level", t.level}, {"entries", entries}};
}

TensorPoly tensor_from_json(const Json& j) {
  TensorPoly t(j.at("level").get<int>());
  const Json& entries = j.at("entries");
  if (entries.size() != t.entries.size()) fail(ErrorCode::kInvalidArgument, "tensor must list all 2^level entries");
  for (const auto& [word, poly] : entries.items()) {
    if (static_cast<int>(word.size()) != t.level) fail(ErrorCode::kInvalidArgument, "word length differs from level");
    t.entries[word_index(word)] = poly_from_json(poly);
  }
  return t;
}

Json vec3_to_json(const Vec3Poly& v) { return Json::array({poly_to_json(v[0]), poly_to_json(v[1]), poly_to_json(v[2])}); }

Json ball_to_json(const RealBall& b, int digits) {
  auto [m, r] = b.to_decimal(digits);
  return Json{{"mid", m}, {"rad", r}};
}

RealBall ball_from_json(const Json& j, long prec) {
  return RealBall::from_decimal(j.at("mid").get<std::string>(), j.at("rad").get<std::string>(), prec);
}

Json complex_ball_to_json(const ComplexBall& z, int digits) {
  return Json{{"re", ball_to_json(z.re(), digits)}, {"im", ball_to_json(z.im(), digits)}};
}

Json certificate_to_json(const PoleCertificate& c) {
  return Json{
      {"schema", kCertificateSchema},
      {"bracket", {{"lo", to_string(c.lo)}, {"hi", to_string(c.hi)}}},
      {"d_lo", ball_to_json(c.d_lo)},
      {"d_hi", ball_to_json(c.d_hi)},
      {"numerator_bound", ball_to_json(c.numerator_bound)},
      {"precision_bits", c.precision},
      {"series_terms", {{"j0", c.j0_terms}, {"j1", c.j1_terms}}},
      {"numerator_pieces", c.numerator_pieces},
      {"bisection_steps", c.bisection_steps},
  };
}

PoleCertificate certificate_from_json(const Json& j) {
  if (j.value("schema", "") != kCertificateSchema) fail(ErrorCode::kInvalidArgument, "not a pole certificate");
  // Decimal balls need enough bits to hold the printed midpoint exactly enough;
  // the radius absorbs whatever rounding remains.
  const long prec = std::max<long>(j.at("precision_bits").get<long>(), kDefaultPrecision);
  PoleCertificate c{parse_rat(j.at("bracket").at("lo").get<std::string>()),
                    parse_rat(j.at("bracket").at("hi").get<std::string>()),
                    ball_from_json(j.at("d_lo"), prec),
                    ball_from_json(j.at("d_hi"), prec),
                    ball_from_json(j.at("numerator_bound"), prec),
                    j.at("precision_bits").get<long>(),
                    j.at("series_terms").at("j0").get<int>(),
                    j.at("series_terms").at("j1").get<int>(),
                    j.at("numerator_pieces").get<int>(),
                    j.at("bisection_steps").get<int>()};
  return c;
}

}  // namespace expsig
