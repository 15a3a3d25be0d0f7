// Copyright 2026 The coexline Authors
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

#ifndef COEXLINE_COEXLINE_HPP
#define COEXLINE_COEXLINE_HPP

#include "coexline/denisov.hpp"
#include "coexline/dynamics.hpp"
#include "coexline/error.hpp"
#include "coexline/model.hpp"
#include "coexline/oracle.hpp"
#include "coexline/parallel.hpp"
#include "coexline/rng.hpp"
#include "coexline/stats.hpp"
#include "coexline/verify.hpp"
#include "coexline/walks.hpp"

#endif  // COEXLINE_COEXLINE_HPP
