#include "orient/gadget_detail.hpp"

namespace orient::detail {

F1Block add_f1_at(GraphSketch& sk, int hub, const std::string& prefix) {
    F1Block b;
    b.hub = hub;
    for (int i = 0; i < 5; ++i)
        b.mids[i] = sk.add_vertex(prefix.empty() ? "" : prefix + "f_" + std::to_string(i + 1));
    b.co_hub = sk.add_vertex(prefix.empty() ? "" : prefix + "f_6");
    for (int i = 0; i < 5; ++i) {
        sk.add_edge(b.hub, b.mids[i]);
        sk.add_edge(b.co_hub, b.mids[i]);
    }
    return b;
}

F1Block add_f1(GraphSketch& sk, const std::string& prefix) {
    int hub = sk.add_vertex(prefix.empty() ? "" : prefix + "z");
    return add_f1_at(sk, hub, prefix);
}

F2Block add_f2(GraphSketch& sk, const std::string& prefix) {
    F2Block b;
    b.left = add_f1(sk, prefix.empty() ? "" : prefix + "a.");
    b.mid = add_f1(sk, prefix.empty() ? "" : prefix + "b.");
    b.right = add_f1(sk, prefix.empty() ? "" : prefix + "c.");
    sk.add_edge(b.left.hub, b.mid.hub);
    sk.add_edge(b.mid.hub, b.right.hub);
    b.port = b.mid.hub;
    return b;
}

KBlueprint add_k(GraphSketch& sk, const std::string& prefix) {
    KBlueprint b;
    for (int i = 0; i < 7; ++i)
        b.q[i] = sk.add_vertex(prefix.empty() ? "" : prefix + "q_" + std::to_string(i + 1));
    for (int i = 0; i < 6; ++i) sk.add_edge(b.q[i], b.q[i + 1]);
    for (int i = 0; i < 3; ++i)
        b.ports[i] = sk.add_vertex(prefix.empty() ? "" : prefix + "c_" + std::to_string(i + 1));
    sk.add_edge(b.ports[0], b.q[0]);
    sk.add_edge(b.ports[1], b.q[3]);
    sk.add_edge(b.ports[2], b.q[6]);
    return b;
}

HBlueprint add_h(GraphSketch& sk, const std::string& prefix) {
    HBlueprint b;
    b.fx = add_f2(sk, prefix.empty() ? "" : prefix + "Fx.");
    b.fnx = add_f2(sk, prefix.empty() ? "" : prefix + "Fn.");
    b.x = sk.add_vertex(prefix.empty() ? "" : prefix + "x");
    b.neg_x = sk.add_vertex(prefix.empty() ? "" : prefix + "neg_x");
    sk.add_edge(b.fx.port, b.x);
    sk.add_edge(b.fnx.port, b.neg_x);
    sk.add_edge(b.x, b.neg_x);
    return b;
}

QBlueprint add_q(GraphSketch& sk, int port_a, int port_b, const std::string& prefix) {
    QBlueprint b;
    b.ports = {port_a, port_b};
    for (int i = 0; i < 7; ++i)
        b.r[i] = sk.add_vertex(prefix.empty() ? "" : prefix + "r_" + std::to_string(i + 1));
    for (int i = 0; i < 6; ++i) sk.add_edge(b.r[i], b.r[i + 1]);
    sk.add_edge(port_a, b.r[0]);
    sk.add_edge(b.r[6], port_b);
    // z1 is simultaneously the hub of its own K_{2,5} (in-sum at most 1)
    // and the neighbor of a forced-zero F2 port (in-sum at least 1), so
    // its in-sum is pinned to exactly 1
    b.z1 = sk.add_vertex(prefix.empty() ? "" : prefix + "z_1");
    sk.add_edge(b.z1, b.r[3]);
    b.z1_f1 = add_f1_at(sk, b.z1, prefix.empty() ? "" : prefix + "F.");
    b.f2 = add_f2(sk, prefix.empty() ? "" : prefix + "Z.");
    sk.add_edge(b.f2.port, b.z1);
    return b;
}

LBlueprint add_l(GraphSketch& sk, int c1, int c2, int c3, const std::string& prefix) {
    LBlueprint b;
    b.ports = {c1, c2, c3};
    b.center = sk.add_vertex(prefix.empty() ? "" : prefix + "p");
    for (int i = 0; i < 3; ++i) {
        b.arm_f1[i] = add_f1(sk, prefix.empty() ? "" : prefix + "A" + std::to_string(i + 1) + ".");
        b.arm_hub[i] = b.arm_f1[i].hub;
        b.arm_inner[i] = sk.add_vertex(
            prefix.empty() ? "" : prefix + "w_" + std::to_string(i + 1));
        sk.add_edge(b.center, b.arm_hub[i]);
        sk.add_edge(b.arm_hub[i], b.arm_inner[i]);
        sk.add_edge(b.arm_inner[i], b.ports[i]);
    }
    return b;
}

SBlueprint add_s(GraphSketch& sk, const std::string& prefix) {
    SBlueprint b;
    for (int i = 0; i < 3; ++i)
        b.ports[i] = sk.add_vertex(prefix.empty() ? "" : prefix + "c_" + std::to_string(i + 1));
    b.l = add_l(sk, b.ports[0], b.ports[1], b.ports[2],
                prefix.empty() ? "" : prefix + "L.");
    const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    for (int i = 0; i < 3; ++i)
        b.q[i] = add_q(sk, b.ports[pairs[i][0]], b.ports[pairs[i][1]],
                       prefix.empty() ? "" : prefix + "Q" + std::to_string(i + 1) + ".");
    return b;
}

TBlueprint add_t(GraphSketch& sk, const std::string& prefix) {
    TBlueprint b;
    for (int i = 0; i < 5; ++i)
        b.p[i] = sk.add_vertex(prefix.empty() ? "" : prefix + "p_" + std::to_string(i + 1));
    b.x = sk.add_vertex(prefix.empty() ? "" : prefix + "x");
    b.neg_x = sk.add_vertex(prefix.empty() ? "" : prefix + "neg_x");
    sk.add_edge(b.x, b.neg_x);
    sk.add_edge(b.p[1], b.x);
    sk.add_edge(b.p[1], b.neg_x);
    sk.add_edge(b.p[1], b.p[0]);
    sk.add_edge(b.p[1], b.p[2]);
    sk.add_edge(b.p[2], b.p[3]);
    sk.add_edge(b.p[2], b.p[4]);
    return b;
}

} // namespace orient::detail
