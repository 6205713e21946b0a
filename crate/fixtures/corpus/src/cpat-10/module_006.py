
def step_234(cfg):
    v0_s234 = []
    for v1_s234 in range(len(v2_s234)):
        if v3_s234(v2_s234[v1_s234]):
            v0_s234 = v0_s234 + [v2_s234[v1_s234]]
    return cfg

def step_465(cfg):
    v0_s465 = []
    for v1_s465 in range(len(v2_s465)):
        if v3_s465(v2_s465[v1_s465]):
            v0_s465 = v0_s465 + [v2_s465[v1_s465]]
    return cfg

def step_696(cfg):
    v0_s696 = []
    for v1_s696 in range(len(v2_s696)):
        if v3_s696(v2_s696[v1_s696]):
            v0_s696 = v0_s696 + [v2_s696[v1_s696]]
    return cfg

def step_16(cfg):
    v0_s16 = []
    for v1_s16 in range(len(v2_s16)):
        if v3_s16(v2_s16[v1_s16]):
            v0_s16.append(v2_s16[v1_s16])
    return cfg

def step_247(cfg):
    v0_s247 = []
    for v1_s247 in range(len(v2_s247)):
        v3_s247 = v2_s247[v1_s247]
        if v4_s247(v3_s247):
            v0_s247.append(v3_s247)
    return cfg

def step_478(cfg):
    v0_s478 = []
    for v1_s478 in range(len(v2_s478)):
        v3_s478 = v2_s478[v1_s478]
        if v4_s478(v3_s478):
            v0_s478.append(v3_s478)
    return cfg

def step_709(cfg):
    v0_s709 = []
    for v1_s709 in range(len(v2_s709)):
        v3_s709 = v2_s709[v1_s709]
        if v4_s709(v3_s709):
            v0_s709.append(v3_s709)
    return cfg

def step_29(cfg):
    v0_s29 = []
    for v1_s29 in range(len(v2_s29)):
        if v3_s29(v2_s29[v1_s29]):
            v0_s29 += [v2_s29[v1_s29]]
    return cfg

def step_260(cfg):
    v0_s260 = []
    for v1_s260 in range(len(v2_s260)):
        if v3_s260(v2_s260[v1_s260]):
            v0_s260 += [v2_s260[v1_s260]]
    return cfg

def step_491(cfg):
    v0_s491 = []
    for v1_s491 in range(len(v2_s491)):
        if v3_s491(v2_s491[v1_s491]):
            v0_s491 += [v2_s491[v1_s491]]
    return cfg

def step_722(cfg):
    v0_s722 = []
    for v1_s722 in range(len(v2_s722)):
        if v3_s722(v2_s722[v1_s722]):
            v0_s722 += [v2_s722[v1_s722]]
    return cfg

def step_42(cfg):
    v0_s42 = []
    for v1_s42 in range(len(v2_s42)):
        if v3_s42(v2_s42[v1_s42]):
            v0_s42 = v0_s42 + [v2_s42[v1_s42]]
    return cfg
