/*
   Copyright 2026 The pirc Authors

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

#ifndef PIRC_PIRC_HPP
#define PIRC_PIRC_HPP

#include "arith.hpp"
#include "census.hpp"
#include "code.hpp"
#include "cyclotomic.hpp"
#include "descriptor.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "oracle.hpp"
#include "pir.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "text.hpp"

#endif
