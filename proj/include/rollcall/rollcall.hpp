// Copyright 2026 The Rollcall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the library (the CLI layer lives in rollcall/cli.hpp).

#ifndef ROLLCALL_ROLLCALL_HPP
#define ROLLCALL_ROLLCALL_HPP

#include "rollcall/characterization.hpp"
#include "rollcall/coalition.hpp"
#include "rollcall/distributions.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/games.hpp"
#include "rollcall/rational.hpp"
#include "rollcall/roll_call.hpp"
#include "rollcall/shapley.hpp"

#endif  // ROLLCALL_ROLLCALL_HPP
