// Copyright 2026 The claimdiv Authors
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

#pragma once

#include "claimdiv/errors.hpp"
#include "claimdiv/format.hpp"
#include "claimdiv/games.hpp"
#include "claimdiv/interval.hpp"
#include "claimdiv/interval_rules.hpp"
#include "claimdiv/json_io.hpp"
#include "claimdiv/problems.hpp"
#include "claimdiv/random.hpp"
#include "claimdiv/rules.hpp"
#include "claimdiv/solution_concepts.hpp"
#include "claimdiv/verifier.hpp"
