// Copyright 2026 The pstlab Authors
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

#include <string>
#include <string_view>

#include "pstlab/graph.hpp"
#include "pstlab/partition.hpp"

namespace pstlab::io {

/// Decimal with 17 significant digits (round-trips every double).
std::string formatReal(double x);

/// Canonical graph JSON: {"name", "n", "edges": [[u, v, w], ...]} with u <= v,
/// edges sorted by (u, v), loops encoded as u == v.
std::string toJson(const Graph& g);
/// Rejects duplicate (u, v) pairs, negative weights and out-of-range indices.
Graph graphFromJson(std::string_view text);

/// {"m": m, "cells": [[...], ...]} with cells sorted internally and by first element.
std::string toJson(const Partition& p);
Partition partitionFromJson(std::string_view text, std::size_t n);

std::string readFile(const std::string& path);

}  // namespace pstlab::io
