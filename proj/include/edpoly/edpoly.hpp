/*
   Copyright 2026 The edpoly Authors

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

#ifndef EDPOLY_EDPOLY_HPP
#define EDPOLY_EDPOLY_HPP

#include "coef_poly.hpp"
#include "curve.hpp"
#include "divpoly.hpp"
#include "errors.hpp"
#include "function_field.hpp"
#include "json_io.hpp"
#include "prime_field.hpp"
#include "sampling.hpp"
#include "series.hpp"
#include "torsion_lab.hpp"
#include "weierstrass_ref.hpp"
#include "y_poly.hpp"

#endif  // EDPOLY_EDPOLY_HPP
