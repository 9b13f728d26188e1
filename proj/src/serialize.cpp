#include "wri/index.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include "wri/error.hpp"

// Layout, all integers little-endian:
//   "WRIX" | u32 version
//   u64 n, m, sigma, r, upsilon, last_id
//   rank/select:  u64 size | vec run_starts | vec32 run_labels | u64 sigma
//                 | sigma x (vec label_runs, vec label_before) | vec label_totals
//   partial sums: vec out_prefix | vec in_prefix | vec f_label
//   toehold:      vec positions | vec src ids | vec dst ids
//   phi:          vec sampled | vec satellite
// where vec = u64 length followed by u64 elements, vec32 the same with u32
// elements.

namespace wri {

namespace {

constexpr std::array<char, 4> kMagic = { 'W', 'R', 'I', 'X' };
constexpr std::uint32_t kVersion = 1;

class Writer {
  public:
    explicit Writer(std::ostream &out) : out_(out) {}

    template <typename T>
    void put(T value) {
        std::array<char, sizeof(T)> bytes;
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            bytes[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff);
        }
        out_.write(bytes.data(), bytes.size());
    }

    template <typename T>
    void put_vector(const std::vector<T> &values) {
        put<std::uint64_t>(values.size());
        for (const T &v : values) {
            put<T>(v);
        }
    }

  private:
    std::ostream &out_;
};

class Reader {
  public:
    explicit Reader(std::istream &in) : in_(in) {}

    template <typename T>
    T get() {
        std::array<char, sizeof(T)> bytes;
        if (!in_.read(bytes.data(), bytes.size()))
            throw FormatError("index file truncated");
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) {
            value |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i])) << (8 * i);
        }
        return static_cast<T>(value);
    }

    template <typename T>
    std::vector<T> get_vector(std::uint64_t max_length) {
        const auto length = get<std::uint64_t>();
        if (length > max_length)
            throw FormatError("index file has an implausible array length");
        std::vector<T> values;
        values.reserve(length);
        for (std::uint64_t i = 0; i < length; ++i) {
            values.push_back(get<T>());
        }
        return values;
    }

    void expect_end() {
        if (in_.peek() != std::char_traits<char>::eof())
            throw FormatError("trailing bytes after index");
    }

  private:
    std::istream &in_;
};

} // namespace

struct Serializer {
    static void write(const RLSequence &seq, Writer &w) {
        w.put<std::uint64_t>(seq.size_);
        w.put_vector(seq.run_starts_);
        w.put_vector(seq.run_labels_);
        w.put<std::uint64_t>(seq.label_runs_.size());
        for (std::size_t c = 0; c < seq.label_runs_.size(); ++c) {
            w.put_vector(seq.label_runs_[c]);
            w.put_vector(seq.label_before_[c]);
        }
        w.put_vector(seq.label_totals_);
    }

    static RLSequence read(Reader &r, std::uint64_t m) {
        RLSequence seq;
        seq.size_ = r.get<std::uint64_t>();
        if (seq.size_ != m)
            throw FormatError("rank/select length does not match edge count");
        seq.run_starts_ = r.get_vector<std::uint64_t>(m);
        seq.run_labels_ = r.get_vector<Label>(m);
        const auto sigma = r.get<std::uint64_t>();
        if (sigma > std::numeric_limits<Label>::max() || seq.run_labels_.size() != seq.run_starts_.size())
            throw FormatError("inconsistent run directory");
        seq.label_runs_.resize(sigma);
        seq.label_before_.resize(sigma);
        for (std::uint64_t c = 0; c < sigma; ++c) {
            seq.label_runs_[c] = r.get_vector<std::uint64_t>(m);
            seq.label_before_[c] = r.get_vector<std::uint64_t>(m);
            if (seq.label_runs_[c].size() != seq.label_before_[c].size())
                throw FormatError("inconsistent label directory");
        }
        seq.label_totals_ = r.get_vector<std::uint64_t>(sigma);
        if (seq.label_totals_.size() != sigma)
            throw FormatError("inconsistent label totals");
        return seq;
    }
};

void serialize(const WheelerRIndex &ix, std::ostream &out) {
    out.write(kMagic.data(), kMagic.size());
    Writer w(out);
    w.put<std::uint32_t>(kVersion);
    w.put<std::uint64_t>(ix.n);
    w.put<std::uint64_t>(ix.m);
    w.put<std::uint64_t>(ix.sigma);
    w.put<std::uint64_t>(ix.r);
    w.put<std::uint64_t>(ix.upsilon);
    w.put<std::uint64_t>(ix.last_id);

    Serializer::write(ix.bwt, w);

    w.put_vector(ix.sums.out_prefix);
    w.put_vector(ix.sums.in_prefix);
    w.put_vector(ix.sums.f_label);

    std::vector<VertexId> src_ids;
    std::vector<VertexId> dst_ids;
    for (const IdPair &pair : ix.toehold.pairs()) {
        src_ids.push_back(pair.src);
        dst_ids.push_back(pair.dst);
    }
    w.put_vector(ix.toehold.positions());
    w.put_vector(src_ids);
    w.put_vector(dst_ids);

    w.put_vector(ix.phi.sampled());
    w.put_vector(ix.phi.satellite());
    if (!out)
        throw std::runtime_error("failed to write index");
}

WheelerRIndex deserialize(std::istream &in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic)
        throw FormatError("not an index file (bad magic)");
    Reader r(in);
    const auto version = r.get<std::uint32_t>();
    if (version != kVersion)
        throw FormatError("unsupported index version " + std::to_string(version));

    WheelerRIndex ix;
    ix.n = r.get<std::uint64_t>();
    ix.m = r.get<std::uint64_t>();
    const auto sigma = r.get<std::uint64_t>();
    if (sigma > std::numeric_limits<Label>::max())
        throw FormatError("alphabet size out of range");
    ix.sigma = static_cast<Label>(sigma);
    ix.r = r.get<std::uint64_t>();
    ix.upsilon = r.get<std::uint64_t>();
    ix.last_id = r.get<std::uint64_t>();
    if (ix.n == 0 || ix.last_id >= ix.n || ix.r > ix.m)
        throw FormatError("inconsistent index header");

    ix.bwt = Serializer::read(r, ix.m);

    ix.sums.out_prefix = r.get_vector<std::uint64_t>(ix.n + 1);
    ix.sums.in_prefix = r.get_vector<std::uint64_t>(ix.n + 1);
    ix.sums.f_label = r.get_vector<std::uint64_t>(sigma + 1);
    if (ix.sums.out_prefix.size() != ix.n + 1 || ix.sums.in_prefix.size() != ix.n + 1
            || ix.sums.f_label.size() != sigma + 1)
        throw FormatError("partial sum arrays have the wrong length");

    auto positions = r.get_vector<std::uint64_t>(ix.m);
    auto src_ids = r.get_vector<VertexId>(ix.m);
    auto dst_ids = r.get_vector<VertexId>(ix.m);
    if (src_ids.size() != positions.size() || dst_ids.size() != positions.size())
        throw FormatError("toehold arrays have mismatched lengths");
    std::vector<IdPair> pairs;
    pairs.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        pairs.push_back({ src_ids[i], dst_ids[i] });
    }

    auto sampled = r.get_vector<VertexId>(ix.n);
    auto satellite = r.get_vector<VertexId>(ix.n);
    r.expect_end();

    try {
        ix.toehold = ToeholdTable(std::move(positions), std::move(pairs));
        ix.phi = PhiStructure(std::move(sampled), std::move(satellite));
    } catch (const InvariantViolation &e) {
        throw FormatError(std::string("corrupt index: ") + e.what());
    }
    return ix;
}

std::string serialize_to_string(const WheelerRIndex &ix) {
    std::ostringstream out(std::ios::binary);
    serialize(ix, out);
    return out.str();
}

WheelerRIndex deserialize_from_string(const std::string &bytes) {
    std::istringstream in(bytes, std::ios::binary);
    return deserialize(in);
}

void save_index(const WheelerRIndex &ix, const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    serialize(ix, out);
}

WheelerRIndex load_index(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return deserialize(in);
}

} // namespace wri
