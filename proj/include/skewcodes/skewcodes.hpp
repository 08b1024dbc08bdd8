/*
   Copyright 2026 The skewcodes Authors

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

/**
 * @file skewcodes.hpp
 * @brief Umbrella header for the library (everything except the CLI layer).
 */

#ifndef SKEWCODES_SKEWCODES_HPP
#define SKEWCODES_SKEWCODES_HPP

#include "gf.hpp"
#include "chainring.hpp"
#include "skewpoly.hpp"
#include "text.hpp"
#include "quotcode.hpp"
#include "classify.hpp"
#include "duality.hpp"

#endif  // SKEWCODES_SKEWCODES_HPP
