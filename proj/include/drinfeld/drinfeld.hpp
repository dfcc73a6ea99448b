/*
   Copyright 2026 The drinfeld-ut Authors

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

#ifndef DRINFELD_DRINFELD_HPP
#define DRINFELD_DRINFELD_HPP

#include "arith.hpp"
#include "fixtures.hpp"
#include "gamma_level.hpp"
#include "hecke.hpp"
#include "poly_matrix.hpp"
#include "ratfun.hpp"
#include "report.hpp"
#include "residue_field.hpp"
#include "spectral.hpp"
#include "tpoly.hpp"
#include "verify.hpp"
#include "xpoly.hpp"

#endif  // DRINFELD_DRINFELD_HPP
