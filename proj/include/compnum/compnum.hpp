// Copyright 2026 The compnum Authors
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

#pragma once

#include "compnum/bitset.hpp"
#include "compnum/bounds.hpp"
#include "compnum/canonical.hpp"
#include "compnum/clique_cover.hpp"
#include "compnum/competition.hpp"
#include "compnum/error.hpp"
#include "compnum/generators.hpp"
#include "compnum/graph.hpp"
#include "compnum/io.hpp"
#include "compnum/report.hpp"
#include "compnum/structure.hpp"
#include "compnum/verify.hpp"
