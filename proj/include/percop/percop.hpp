// Copyright 2026 The percop Authors.
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

// Umbrella header.

#ifndef PERCOP_PERCOP_HPP_
#define PERCOP_PERCOP_HPP_

#include "percop/constructions.hpp"
#include "percop/corners.hpp"
#include "percop/error.hpp"
#include "percop/graph.hpp"
#include "percop/io.hpp"
#include "percop/periodic.hpp"
#include "percop/search.hpp"
#include "percop/solver.hpp"
#include "percop/table.hpp"
#include "percop/treewidth.hpp"
#include "percop/vertex_set.hpp"

#endif  // PERCOP_PERCOP_HPP_
