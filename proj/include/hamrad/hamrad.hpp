// Copyright 2026 The hamrad Authors
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

#include "hamrad/error.hpp"
#include "hamrad/exact_solver.hpp"
#include "hamrad/exceptional.hpp"
#include "hamrad/graceful_order.hpp"
#include "hamrad/hamming_graph.hpp"
#include "hamrad/io.hpp"
#include "hamrad/radio_labeling.hpp"
