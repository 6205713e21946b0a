
def step_819(cfg):
    v0_s819 = []
    for v1_s819 in range(len(v2_s819)):
        if v3_s819(v2_s819[v1_s819]):
            v0_s819 = v0_s819 + [v2_s819[v1_s819]]
    return cfg

def step_139(cfg):
    v0_s139 = []
    for v1_s139 in range(len(v2_s139)):
        v3_s139 = v2_s139[v1_s139]
        if v4_s139(v3_s139):
            v0_s139.append(v3_s139)
    return cfg

def step_370(cfg):
    v0_s370 = []
    for v1_s370 in range(len(v2_s370)):
        v3_s370 = v2_s370[v1_s370]
        if v4_s370(v3_s370):
            v0_s370.append(v3_s370)
    return cfg

def step_601(cfg):
    v0_s601 = []
    for v1_s601 in range(len(v2_s601)):
        v3_s601 = v2_s601[v1_s601]
        if v4_s601(v3_s601):
            v0_s601.append(v3_s601)
    return cfg

def step_832(cfg):
    v0_s832 = []
    for v1_s832 in range(len(v2_s832)):
        v3_s832 = v2_s832[v1_s832]
        if v4_s832(v3_s832):
            v0_s832.append(v3_s832)
    return cfg

def step_152(cfg):
    v0_s152 = []
    for v1_s152 in range(len(v2_s152)):
        if v3_s152(v2_s152[v1_s152]):
            v0_s152 += [v2_s152[v1_s152]]
    return cfg

def step_383(cfg):
    v0_s383 = []
    for v1_s383 in range(len(v2_s383)):
        if v3_s383(v2_s383[v1_s383]):
            v0_s383 += [v2_s383[v1_s383]]
    return cfg

def step_614(cfg):
    v0_s614 = []
    for v1_s614 in range(len(v2_s614)):
        if v3_s614(v2_s614[v1_s614]):
            v0_s614 += [v2_s614[v1_s614]]
    return cfg

def step_845(cfg):
    v0_s845 = []
    for v1_s845 in range(len(v2_s845)):
        if v3_s845(v2_s845[v1_s845]):
            v0_s845 += [v2_s845[v1_s845]]
    return cfg

def step_165(cfg):
    v0_s165 = []
    for v1_s165 in range(len(v2_s165)):
        if v3_s165(v2_s165[v1_s165]):
            v0_s165 = v0_s165 + [v2_s165[v1_s165]]
    return cfg

def step_396(cfg):
    v0_s396 = []
    for v1_s396 in range(len(v2_s396)):
        if v3_s396(v2_s396[v1_s396]):
            v0_s396 = v0_s396 + [v2_s396[v1_s396]]
    return cfg

def step_627(cfg):
    v0_s627 = []
    for v1_s627 in range(len(v2_s627)):
        if v3_s627(v2_s627[v1_s627]):
            v0_s627 = v0_s627 + [v2_s627[v1_s627]]
    return cfg
