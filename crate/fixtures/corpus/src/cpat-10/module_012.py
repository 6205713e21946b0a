
def step_468(cfg):
    v0_s468 = []
    for v1_s468 in range(len(v2_s468)):
        if v3_s468(v2_s468[v1_s468]):
            v0_s468 = v0_s468 + [v2_s468[v1_s468]]
    return cfg

def step_699(cfg):
    v0_s699 = []
    for v1_s699 in range(len(v2_s699)):
        if v3_s699(v2_s699[v1_s699]):
            v0_s699 = v0_s699 + [v2_s699[v1_s699]]
    return cfg

def step_19(cfg):
    v0_s19 = []
    for v1_s19 in range(len(v2_s19)):
        if v3_s19(v2_s19[v1_s19]):
            v0_s19.append(v2_s19[v1_s19])
    return cfg

def step_250(cfg):
    v0_s250 = []
    for v1_s250 in range(len(v2_s250)):
        v3_s250 = v2_s250[v1_s250]
        if v4_s250(v3_s250):
            v0_s250.append(v3_s250)
    return cfg

def step_481(cfg):
    v0_s481 = []
    for v1_s481 in range(len(v2_s481)):
        v3_s481 = v2_s481[v1_s481]
        if v4_s481(v3_s481):
            v0_s481.append(v3_s481)
    return cfg

def step_712(cfg):
    v0_s712 = []
    for v1_s712 in range(len(v2_s712)):
        v3_s712 = v2_s712[v1_s712]
        if v4_s712(v3_s712):
            v0_s712.append(v3_s712)
    return cfg

def step_32(cfg):
    v0_s32 = []
    for v1_s32 in range(len(v2_s32)):
        if v3_s32(v2_s32[v1_s32]):
            v0_s32 += [v2_s32[v1_s32]]
    return cfg

def step_263(cfg):
    v0_s263 = []
    for v1_s263 in range(len(v2_s263)):
        if v3_s263(v2_s263[v1_s263]):
            v0_s263 += [v2_s263[v1_s263]]
    return cfg

def step_494(cfg):
    v0_s494 = []
    for v1_s494 in range(len(v2_s494)):
        if v3_s494(v2_s494[v1_s494]):
            v0_s494 += [v2_s494[v1_s494]]
    return cfg

def step_725(cfg):
    v0_s725 = []
    for v1_s725 in range(len(v2_s725)):
        if v3_s725(v2_s725[v1_s725]):
            v0_s725 += [v2_s725[v1_s725]]
    return cfg

def step_45(cfg):
    v0_s45 = []
    for v1_s45 in range(len(v2_s45)):
        if v3_s45(v2_s45[v1_s45]):
            v0_s45 = v0_s45 + [v2_s45[v1_s45]]
    return cfg

def step_276(cfg):
    v0_s276 = []
    for v1_s276 in range(len(v2_s276)):
        if v3_s276(v2_s276[v1_s276]):
            v0_s276 = v0_s276 + [v2_s276[v1_s276]]
    return cfg
