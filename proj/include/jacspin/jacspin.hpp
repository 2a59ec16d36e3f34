/*
   Copyright 2026 the jacspin authors

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

// Umbrella header: the whole library except the JSON bindings, which pull in
// the vendored nlohmann header and stay opt-in via json_io.hpp.

#include "rational.hpp"
#include "polynomial.hpp"
#include "poly_fraction.hpp"
#include "quad_ext.hpp"
#include "hyperbolic.hpp"
#include "split_quaternion.hpp"
#include "spinor.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "verifier.hpp"
#include "text_io.hpp"
