/*
 * Copyright 2026 The gammatools authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "gamma/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gamma/realize.hpp"

namespace gammatools {
namespace fs = std::filesystem;

GammaSet GammaSet::initial() {
    GammaSet g;
    g.n = 1;
    g.sets.emplace_back(1, std::vector<int>{0});
    return g;
}

Certifier certifier_from_name(const std::string& name) {
    if (name == "rules")
        return Certifier::rules;
    if (name == "lothaire")
        return Certifier::lothaire;
    if (name == "pair")
        return Certifier::pair;
    if (name == "constructive")
        return Certifier::constructive;
    throw std::invalid_argument("unknown certifier: " + name);
}

std::pair<CertResult, CertResult> certify_candidates(const PeriodSet& parent, int n, Certifier c) {
    if (parent.length() != n - 1)
        throw std::invalid_argument("parent has wrong length for incremental step");
    if (c == Certifier::pair)
        return certify_incremental_pair(parent, n);
    std::vector<int> as_is = parent.periods();
    std::vector<int> extended = as_is;
    extended.push_back(n - 1);
    switch (c) {
    case Certifier::rules:
        return {certify_rules(as_is, n), certify_rules(extended, n)};
    case Certifier::lothaire:
        return {certify_lothaire(as_is, n), certify_lothaire(extended, n)};
    case Certifier::constructive:
        return {certify_constructive(n, as_is).cert, certify_constructive(n, extended).cert};
    default:
        throw std::logic_error("unreachable");
    }
}

GammaSet incremental_gamma(int n, const GammaSet& prev, Certifier c) {
    if (n < 2 || prev.n != n - 1)
        throw std::invalid_argument("incremental step requires Gamma(n-1)");
    GammaSet out;
    out.n = n;
    for (const auto& parent : prev.sets) {
        auto [keep, extend] = certify_candidates(parent, n, c);
        if (keep.valid)
            out.sets.emplace_back(n, parent.periods());
        if (extend.valid) {
            std::vector<int> q = parent.periods();
            q.push_back(n - 1);
            out.sets.emplace_back(n, std::move(q));
        }
    }
    return out;
}

std::pair<GammaSet, std::vector<PeriodSet>> incremental_gamma_with_dying(int n, const GammaSet& prev) {
    if (n < 2 || prev.n != n - 1)
        throw std::invalid_argument("incremental step requires Gamma(n-1)");
    GammaSet out;
    out.n = n;
    std::vector<PeriodSet> dying;
    for (const auto& parent : prev.sets) {
        auto [keep, extend] = certify_incremental_pair(parent, n);
        if (keep.valid)
            out.sets.emplace_back(n, parent.periods());
        if (extend.valid) {
            std::vector<int> q = parent.periods();
            q.push_back(n - 1);
            out.sets.emplace_back(n, std::move(q));
        }
        if (!keep.valid && !extend.valid)
            dying.push_back(parent);
    }
    return {std::move(out), std::move(dying)};
}

GammaSet project_down(const GammaSet& g) {
    if (g.n < 2)
        throw std::invalid_argument("cannot project below length 1");
    GammaSet out;
    out.n = g.n - 1;
    for (const auto& p : g.sets) {
        std::vector<int> q = p.periods();
        if (q.back() == g.n - 1)
            q.pop_back();
        // removal keeps canonical order non-decreasing; duplicates are adjacent
        if (!out.sets.empty() && out.sets.back().periods() == q)
            continue;
        out.sets.emplace_back(out.n, std::move(q));
    }
    return out;
}

GammaStats compute_stats(const GammaSet& g) {
    GammaStats s;
    for (const auto& p : g.sets) {
        ++s.by_basic_period[p.basic_period()];
        ++s.by_weight[p.weight()];
    }
    return s;
}

std::string stats_to_csv(const GammaStats& s) {
    std::ostringstream os;
    os << "basic_period,count\n";
    for (const auto& [k, v] : s.by_basic_period)
        os << k << ',' << v << '\n';
    os << '\n';
    os << "weight,count\n";
    for (const auto& [k, v] : s.by_weight)
        os << k << ',' << v << '\n';
    return os.str();
}

void write_gamma_file(const fs::path& path, const GammaSet& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << "# gamma v1\n" << "n=" << g.n << "\n" << "count=" << g.kappa() << "\n";
    for (const auto& p : g.sets)
        out << p.to_line() << "\n";
    if (!out)
        throw std::runtime_error("write failure on " + path.string());
}

namespace {

struct GammaHeader {
    int n = 0;
    std::size_t count = 0;
};

GammaHeader read_header(std::istream& in, const fs::path& path) {
    std::string line;
    if (!std::getline(in, line) || line != "# gamma v1")
        throw std::runtime_error(path.string() + ":1: missing '# gamma v1' header");
    GammaHeader h;
    if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
        throw std::runtime_error(path.string() + ":2: missing n= field");
    h.n = std::stoi(line.substr(2));
    if (!std::getline(in, line) || line.rfind("count=", 0) != 0)
        throw std::runtime_error(path.string() + ":3: missing count= field");
    h.count = static_cast<std::size_t>(std::stoull(line.substr(6)));
    return h;
}

} // namespace

void for_each_gamma_line(const fs::path& path,
                         const std::function<void(const PeriodSet&, std::size_t)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    GammaHeader h = read_header(in, path);
    std::string line;
    std::size_t seen = 0;
    for (std::size_t line_no = 4; std::getline(in, line); ++line_no) {
        PeriodSet p = [&] {
            try {
                return PeriodSet::parse_line(line, h.n);
            } catch (const std::exception& e) {
                throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
            }
        }();
        fn(p, line_no);
        ++seen;
    }
    if (seen != h.count)
        throw std::runtime_error(path.string() + ": count=" + std::to_string(h.count) +
                                 " but found " + std::to_string(seen) + " sets");
}

int gamma_file_length(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    return read_header(in, path).n;
}

fs::path gamma_file_name(const fs::path& dir, int n) {
    return dir / (std::to_string(n) + ".gamma");
}

GammaSet read_gamma_file(const fs::path& path) {
    GammaSet g;
    g.n = gamma_file_length(path);
    for_each_gamma_line(path, [&](const PeriodSet& p, std::size_t) { g.sets.push_back(p); });
    return g;
}

GammaStats stats_of_file(const fs::path& path) {
    GammaStats s;
    for_each_gamma_line(path, [&](const PeriodSet& p, std::size_t) {
        ++s.by_basic_period[p.basic_period()];
        ++s.by_weight[p.weight()];
    });
    return s;
}

namespace {

struct ChunkResult {
    std::size_t kept = 0;
    std::size_t dying = 0;
};

// Certifies parent lines [lo, hi) of the previous file, appending surviving
// sets to part_path in canonical order.
ChunkResult run_chunk(const fs::path& prev_path, int n, Certifier c,
                      std::size_t lo, std::size_t hi, const fs::path& part_path) {
    std::ifstream in(prev_path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + prev_path.string());
    std::string line;
    for (int i = 0; i < 3; ++i)
        std::getline(in, line); // header, validated beforehand
    for (std::size_t skip = 0; skip < lo; ++skip)
        std::getline(in, line);

    std::ofstream out(part_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + part_path.string());

    ChunkResult res;
    for (std::size_t idx = lo; idx < hi && std::getline(in, line); ++idx) {
        PeriodSet parent = PeriodSet::parse_line(line, n - 1);
        auto [keep, extend] = certify_candidates(parent, n, c);
        if (keep.valid) {
            out << line << "\n";
            ++res.kept;
        }
        if (extend.valid) {
            out << line << "," << n - 1 << "\n";
            ++res.kept;
        }
        if (!keep.valid && !extend.valid)
            ++res.dying;
    }
    if (!out)
        throw std::runtime_error("write failure on " + part_path.string());
    return res;
}

std::size_t line_count_of(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return read_header(in, path).count;
}

// A file is a valid resume point only if it parses end to end.
bool file_is_valid(const fs::path& path, int expected_n) {
    try {
        if (gamma_file_length(path) != expected_n)
            return false;
        for_each_gamma_line(path, [](const PeriodSet&, std::size_t) {});
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void append_file(std::ofstream& out, const fs::path& part) {
    std::ifstream in(part, std::ios::binary);
    if (in.peek() == std::char_traits<char>::eof())
        return; // inserting an empty streambuf would set failbit on out
    out << in.rdbuf();
    if (in.bad())
        throw std::runtime_error("read failure on " + part.string());
}

} // namespace

void enumerate_range(int n_max, const fs::path& out_dir, Certifier c, int jobs,
                     const fs::path& from_dir,
                     const std::function<void(const EnumProgress&)>& on_length) {
    if (n_max < 1)
        throw std::invalid_argument("n_max must be positive");
    fs::create_directories(out_dir);
    const fs::path resume_dir = from_dir.empty() ? out_dir : from_dir;

    int start = 0;
    for (int k = n_max; k >= 1; --k) {
        fs::path f = gamma_file_name(resume_dir, k);
        if (fs::exists(f) && file_is_valid(f, k)) {
            start = k;
            if (resume_dir != out_dir)
                fs::copy_file(f, gamma_file_name(out_dir, k), fs::copy_options::overwrite_existing);
            break;
        }
    }

    if (start == 0) {
        write_gamma_file(gamma_file_name(out_dir, 1), GammaSet::initial());
        start = 1;
        if (on_length)
            on_length({1, 1, 0});
    }

    for (int n = start + 1; n <= n_max; ++n) {
        const fs::path prev_path = gamma_file_name(out_dir, n - 1);
        const fs::path out_path = gamma_file_name(out_dir, n);
        const std::size_t parents = line_count_of(prev_path);

        std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(
            static_cast<std::size_t>(std::max(jobs, 1)), parents));

        std::vector<fs::path> parts(workers);
        std::vector<ChunkResult> results(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            parts[w] = out_path;
            parts[w] += ".part" + std::to_string(w);
            const std::size_t lo = parents * w / workers;
            const std::size_t hi = parents * (w + 1) / workers;
            threads.emplace_back([&, w, lo, hi] {
                try {
                    results[w] = run_chunk(prev_path, n, c, lo, hi, parts[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);

        std::size_t kappa = 0, dying = 0;
        for (const auto& r : results) {
            kappa += r.kept;
            dying += r.dying;
        }

        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + out_path.string());
        out << "# gamma v1\n" << "n=" << n << "\n" << "count=" << kappa << "\n";
        for (const auto& part : parts) {
            append_file(out, part);
            fs::remove(part);
        }
        out.close();
        if (!out)
            throw std::runtime_error("write failure on " + out_path.string());

        if (on_length)
            on_length({n, kappa, dying});
    }
}

} // namespace gammatools
