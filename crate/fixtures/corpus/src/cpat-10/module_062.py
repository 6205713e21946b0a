
def step_596(cfg):
    v0_s596 = []
    for v1_s596 in range(len(v2_s596)):
        if v3_s596(v2_s596[v1_s596]):
            v0_s596 += [v2_s596[v1_s596]]
    return cfg

def step_827(cfg):
    v0_s827 = []
    for v1_s827 in range(len(v2_s827)):
        if v3_s827(v2_s827[v1_s827]):
            v0_s827 += [v2_s827[v1_s827]]
    return cfg

def step_147(cfg):
    v0_s147 = []
    for v1_s147 in range(len(v2_s147)):
        if v3_s147(v2_s147[v1_s147]):
            v0_s147 = v0_s147 + [v2_s147[v1_s147]]
    return cfg

def step_378(cfg):
    v0_s378 = []
    for v1_s378 in range(len(v2_s378)):
        if v3_s378(v2_s378[v1_s378]):
            v0_s378 = v0_s378 + [v2_s378[v1_s378]]
    return cfg

def step_609(cfg):
    v0_s609 = []
    for v1_s609 in range(len(v2_s609)):
        if v3_s609(v2_s609[v1_s609]):
            v0_s609 = v0_s609 + [v2_s609[v1_s609]]
    return cfg

def step_840(cfg):
    v0_s840 = []
    for v1_s840 in range(len(v2_s840)):
        if v3_s840(v2_s840[v1_s840]):
            v0_s840 = v0_s840 + [v2_s840[v1_s840]]
    return cfg

def step_160(cfg):
    v0_s160 = []
    for v1_s160 in range(len(v2_s160)):
        v3_s160 = v2_s160[v1_s160]
        if v4_s160(v3_s160):
            v0_s160.append(v3_s160)
    return cfg

def step_391(cfg):
    v0_s391 = []
    for v1_s391 in range(len(v2_s391)):
        v3_s391 = v2_s391[v1_s391]
        if v4_s391(v3_s391):
            v0_s391.append(v3_s391)
    return cfg

def step_622(cfg):
    v0_s622 = []
    for v1_s622 in range(len(v2_s622)):
        v3_s622 = v2_s622[v1_s622]
        if v4_s622(v3_s622):
            v0_s622.append(v3_s622)
    return cfg

def step_853(cfg):
    v0_s853 = []
    for v1_s853 in range(len(v2_s853)):
        v3_s853 = v2_s853[v1_s853]
        if v4_s853(v3_s853):
            v0_s853.append(v3_s853)
    return cfg

def step_173(cfg):
    v0_s173 = []
    for v1_s173 in range(len(v2_s173)):
        if v3_s173(v2_s173[v1_s173]):
            v0_s173 += [v2_s173[v1_s173]]
    return cfg

def step_404(cfg):
    v0_s404 = []
    for v1_s404 in range(len(v2_s404)):
        if v3_s404(v2_s404[v1_s404]):
            v0_s404 += [v2_s404[v1_s404]]
    return cfg
