// Copyright 2026 The approxcore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APPROXCORE_APPROXCORE_HPP
#define APPROXCORE_APPROXCORE_HPP

#include "approxcore/bipartite_solver.hpp"
#include "approxcore/errors.hpp"
#include "approxcore/half_integral.hpp"
#include "approxcore/instance.hpp"
#include "approxcore/json_io.hpp"
#include "approxcore/mechanism.hpp"
#include "approxcore/rational.hpp"
#include "approxcore/verification.hpp"

#endif  // APPROXCORE_APPROXCORE_HPP
