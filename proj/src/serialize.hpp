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

#pragma once

#include <json.hpp>

#include "ball.hpp"
#include "hierarchy.hpp"
#include "pole.hpp"

namespace expsig {

using Json = nlohmann::ordered_json;

// [[i, j, "num/den"], ...] in ascending exponent order.
Json poly_to_json(const Poly2& p);
Poly2 poly_from_json(const Json& j);

// {"level": n, "entries": {"12...": poly}}
Json tensor_to_json(const TensorPoly& t);
TensorPoly tensor_from_json(const Json& j);

Json vec3_to_json(const Vec3Poly& v);

// {"mid": "...", "rad": "..."}; decimal strings, the radius absorbs the
// decimal rounding of the midpoint.
Json ball_to_json(const RealBall& b, int digits = 25);
RealBall ball_from_json(const Json& j, long prec = kDefaultPrecision);
Json complex_ball_to_json(const ComplexBall& z, int digits = 25);

inline constexpr const char* kCertificateSchema = "expsig.pole-certificate/1";
Json certificate_to_json(const PoleCertificate& c);
// Balls are re-read as exact decimals; check_certificate on the result is an
// offline verification.
PoleCertificate certificate_from_json(const Json& j);

}  // namespace expsig
